#ifndef NCSYLV_ELEMENT_HPP
#define NCSYLV_ELEMENT_HPP

// Sparse elements of the free algebra: finite sums of words with Laurent
// coefficients, truncated by word length.

#include <algorithm>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "word.hpp"

namespace ncsylv {

inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// Rewrites words into canonical representatives of a quotient. Returning
/// nullopt drops the word entirely (used for filtered computations).
class WordReducer {
public:
    virtual ~WordReducer() = default;
    virtual std::optional<std::pair<Word, LaurentPoly>> reduce(const Word& w) const = 0;
};

using ReducerPtr = std::shared_ptr<const WordReducer>;

class Element {
public:
    using Map = std::unordered_map<Word, LaurentPoly>;
    using Term = std::pair<Word, LaurentPoly>;

    explicit Element(int order = kUnbounded, ReducerPtr reducer = nullptr)
        : order_(order), reducer_(std::move(reducer)) {
        if (order_ < 0) throw std::invalid_argument("truncation order must be nonnegative");
    }

    static Element scalar(const LaurentPoly& c, int order = kUnbounded, ReducerPtr r = nullptr) {
        Element e(order, std::move(r));
        e.add_term(Word(), c);
        return e;
    }
    static Element one(int order = kUnbounded, ReducerPtr r = nullptr) { return scalar(LaurentPoly(1), order, r); }
    static Element letter(Letter l, int order = kUnbounded, ReducerPtr r = nullptr) {
        Element e(order, std::move(r));
        e.add_term(Word{l}, LaurentPoly(1));
        return e;
    }
    static Element monomial(const Word& w, const LaurentPoly& c, int order = kUnbounded, ReducerPtr r = nullptr) {
        Element e(order, std::move(r));
        e.add_term(w, c);
        return e;
    }

    int order() const { return order_; }
    const ReducerPtr& reducer() const { return reducer_; }
    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c*w, applying truncation and the reducer.
    void add_term(const Word& w, const LaurentPoly& c) {
        if (c.is_zero() || int(w.size()) > order_) return;
        if (reducer_) {
            auto red = reducer_->reduce(w);
            if (!red) return;
            accumulate(red->first, red->second.is_one() ? c : c * red->second);
        } else {
            accumulate(w, c);
        }
    }

    LaurentPoly coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    LaurentPoly constant_term() const { return coefficient(Word()); }

    int max_degree() const {
        int d = -1;
        for (const auto& [w, c] : terms_) d = std::max(d, int(w.size()));
        return d;
    }
    int min_degree() const {
        int d = kUnbounded;
        for (const auto& [w, c] : terms_) d = std::min(d, int(w.size()));
        return terms_.empty() ? -1 : d;
    }

    Element homogeneous(int d) const {
        Element e(order_, reducer_);
        for (const auto& [w, c] : terms_)
            if (int(w.size()) == d) e.terms_.emplace(w, c);
        return e;
    }

    /// Same terms in a different truncation/reduction context.
    Element rebased(int order, ReducerPtr reducer) const {
        Element e(order, std::move(reducer));
        for (const auto& [w, c] : terms_) e.add_term(w, c);
        return e;
    }

    /// Terms sorted shortlex (by length, then lexicographically).
    std::vector<Term> sorted_terms() const {
        std::vector<Term> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return shortlex_less(a.first, b.first); });
        return out;
    }

    Element operator-() const {
        Element e = *this;
        for (auto& [w, c] : e.terms_) c = -c;
        return e;
    }

    Element& operator+=(const Element& o) {
        order_ = std::min(order_, o.order_);
        if (!reducer_) reducer_ = o.reducer_;
        drop_beyond_order();
        for (const auto& [w, c] : o.terms_) {
            if (int(w.size()) > order_) continue;
            if (reducer_ && reducer_ != o.reducer_)
                add_term(w, c);
            else
                accumulate(w, c);
        }
        return *this;
    }
    Element& operator-=(const Element& o) { return *this += -o; }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    Element scaled(const LaurentPoly& s) const {
        Element e(order_, reducer_);
        if (s.is_zero()) return e;
        for (const auto& [w, c] : terms_) e.terms_.emplace(w, c * s);
        return e;
    }

    friend Element operator*(const Element& x, const Element& y) {
        Element r(std::min(x.order_, y.order_), x.reducer_ ? x.reducer_ : y.reducer_);
        for (const auto& [wx, cx] : x.terms_) {
            int room = r.order_ - int(wx.size());
            if (room < 0) continue;
            for (const auto& [wy, cy] : y.terms_) {
                if (int(wy.size()) > room) continue;
                r.add_term(wx + wy, cx * cy);
            }
        }
        return r;
    }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    std::string to_string(char name = 'a') const;

private:
    void accumulate(const Word& w, const LaurentPoly& c) {
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void drop_beyond_order() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = int(it->first.size()) > order_ ? terms_.erase(it) : std::next(it);
    }

    Map terms_;
    int order_;
    ReducerPtr reducer_;
};

/// Renders c*w as a summand; returns the sign separately so callers can join terms.
inline std::pair<bool, std::string> format_term(const LaurentPoly& c, const std::string& word) {
    bool neg = false;
    std::string coef;
    if (c.is_monomial()) {
        const auto& [mono, value] = c.terms()[0];
        neg = value < 0;
        Rational mag = abs(value);
        std::string ms = mono.to_string();
        if (ms.empty()) {
            coef = mag == 1 ? "" : mag.get_str();
        } else {
            coef = (mag == 1 ? "" : mag.get_str() + "*") + ms;
        }
    } else {
        coef = "(" + c.to_string() + ")";
    }
    if (word == "1") return {neg, coef.empty() ? "1" : coef};
    return {neg, coef.empty() ? word : coef + "*" + word};
}

inline std::string Element::to_string(char name) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : sorted_terms()) {
        auto [neg, body] = format_term(c, w.to_string(name));
        if (first)
            out += neg ? "-" + body : body;
        else
            out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

/// 1/x = 1 + S + S^2 + ... for x = 1 - S, computed degree by degree up to the
/// truncation order. The result is both the left and the right inverse.
inline Element geometric_inverse(const Element& x) {
    if (x.order() == kUnbounded) throw std::invalid_argument("geometric_inverse needs a finite truncation order");
    if (!x.constant_term().is_one()) throw std::domain_error("geometric_inverse: constant term must be 1");
    const int order = x.order();
    std::vector<Element> s(order + 1, Element(order, x.reducer()));
    for (const auto& [w, c] : x.terms())
        if (!w.empty()) s[w.size()].add_term(w, -c);
    std::vector<Element> y;
    y.push_back(Element::one(order, x.reducer()));
    for (int d = 1; d <= order; ++d) {
        Element yd(order, x.reducer());
        for (int k = 1; k <= d; ++k)
            if (!s[k].is_zero() && !y[d - k].is_zero()) yd += s[k] * y[d - k];
        y.push_back(std::move(yd));
    }
    Element out(order, x.reducer());
    for (auto& part : y) out += part;
    return out;
}

inline Element power(const Element& x, int k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    Element r = Element::one(x.order(), x.reducer());
    for (int t = 0; t < k; ++t) r = r * x;
    return r;
}

}  // namespace ncsylv

#endif  // NCSYLV_ELEMENT_HPP
