#ifndef NCSYLV_COEFF_HPP
#define NCSYLV_COEFF_HPP

// Exact scalars: rationals, multiparameter Laurent polynomials in q and q[i,j],
// and polynomials in beta.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ncsylv {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Largest matrix dimension supported by the packed parameter layout.
inline constexpr int kMaxDim = 6;
inline constexpr int kParamSlots = 16;

/// A weight parameter: either the single q or q[i,j] with i < j.
class Param {
public:
    static constexpr Param q() { return Param(0); }

    static Param pair(int i, int j) {
        if (i < 1 || j > kMaxDim || i >= j)
            throw std::invalid_argument("Param::pair requires 1 <= i < j <= " + std::to_string(kMaxDim));
        return Param(1 + (j - 1) * (j - 2) / 2 + (i - 1));
    }

    static Param from_slot(int slot) {
        if (slot < 0 || slot >= kParamSlots) throw std::out_of_range("Param slot");
        return Param(slot);
    }

    constexpr int slot() const { return slot_; }
    constexpr bool is_single() const { return slot_ == 0; }

    std::pair<int, int> indices() const {
        if (is_single()) throw std::logic_error("single q has no indices");
        int idx = slot_ - 1;
        int j = 2;
        while (idx >= j - 1) {
            idx -= j - 1;
            ++j;
        }
        return {idx + 1, j};
    }

    std::string name() const {
        if (is_single()) return "q";
        auto [i, j] = indices();
        return "q[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }

    friend constexpr auto operator<=>(Param, Param) = default;

private:
    constexpr explicit Param(int slot) : slot_(slot) {}
    int slot_;
};

/// Exponent vector over the parameter slots.
class Monomial {
public:
    Monomial() { exps_.fill(0); }

    static Monomial of(Param p, int e) {
        Monomial m;
        m.exps_[p.slot()] = checked(e);
        return m;
    }

    int exponent(Param p) const { return exps_[p.slot()]; }
    int exponent(int slot) const { return exps_[slot]; }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int s = 0; s < kParamSlots; ++s) r.exps_[s] = checked(int(exps_[s]) + int(o.exps_[s]));
        return r;
    }

    Monomial inverse() const {
        Monomial r;
        for (int s = 0; s < kParamSlots; ++s) r.exps_[s] = checked(-int(exps_[s]));
        return r;
    }

    Monomial pow(int k) const {
        Monomial r;
        for (int s = 0; s < kParamSlots; ++s) r.exps_[s] = checked(int(exps_[s]) * k);
        return r;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto e : exps_) h = (h ^ std::uint16_t(e)) * 1099511628211ull;
        return h;
    }

    std::string to_string() const {
        std::string out;
        for (int s = 0; s < kParamSlots; ++s) {
            if (exps_[s] == 0) continue;
            if (!out.empty()) out += '*';
            out += Param::from_slot(s).name();
            if (exps_[s] != 1) out += "^" + std::to_string(exps_[s]);
        }
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    static std::int16_t checked(int e) {
        if (e > std::numeric_limits<std::int16_t>::max() || e < std::numeric_limits<std::int16_t>::min())
            throw std::overflow_error("Laurent exponent overflow");
        return static_cast<std::int16_t>(e);
    }

    std::array<std::int16_t, kParamSlots> exps_;
};

/// Values assigned to parameters when specializing.
using Assignment = std::map<Param, Rational>;

/// Sparse Laurent polynomial with rational coefficients. Terms sorted by
/// monomial, no zero coefficients.
class LaurentPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(const Rational& c) {
        if (c != 0) terms_.emplace_back(Monomial(), c);
    }
    LaurentPoly(const Monomial& m, const Rational& c) {
        if (c != 0) terms_.emplace_back(m, c);
    }

    static LaurentPoly param(Param p, int e = 1) { return LaurentPoly(Monomial::of(p, e), Rational(1)); }

    /// q[i,j]^e with the conventions q[i,i] = 1 and q[j,i] = q[i,j]^-1.
    static LaurentPoly qij(int i, int j, int e = 1) {
        if (i == j || e == 0) return LaurentPoly(1);
        if (i < j) return param(Param::pair(i, j), e);
        return param(Param::pair(j, i), -e);
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
    bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].second == 1; }

    Rational constant_value() const {
        if (!is_constant()) throw std::logic_error("LaurentPoly is not constant");
        return terms_.empty() ? Rational(0) : terms_[0].second;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        if (o.terms_.empty()) return *this;
        if (terms_.empty()) return *this = o;
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
                out.push_back(std::move(*a++));
            } else if (a == terms_.end() || b->first < a->first) {
                out.push_back(*b++);
            } else {
                Rational s = a->second + b->second;
                if (s != 0) out.emplace_back(a->first, std::move(s));
                ++a;
                ++b;
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.terms_.empty() || b.terms_.empty()) return r;
        if (a.terms_.size() == 1 && b.terms_.size() == 1) {
            r.terms_.emplace_back(a.terms_[0].first * b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
            return r;
        }
        std::vector<Term> raw;
        raw.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) raw.emplace_back(ma * mb, ca * cb);
        std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        for (auto& t : raw) {
            if (!r.terms_.empty() && r.terms_.back().first == t.first) {
                r.terms_.back().second += t.second;
                if (r.terms_.back().second == 0) r.terms_.pop_back();
            } else {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Inverse of a single monomial term; anything else is a usage error.
    LaurentPoly inverse() const {
        if (!is_monomial()) throw std::domain_error("only monomial Laurent polynomials are invertible");
        return LaurentPoly(terms_[0].first.inverse(), 1 / terms_[0].second);
    }

    LaurentPoly pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        LaurentPoly r(1);
        LaurentPoly base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return r;
    }

    /// Exact evaluation; every parameter that occurs must be assigned a nonzero value.
    Rational specialize(const Assignment& values) const {
        Rational total(0);
        for (const auto& [mono, c] : terms_) {
            Rational v = c;
            for (int s = 0; s < kParamSlots; ++s) {
                int e = mono.exponent(s);
                if (e == 0) continue;
                auto it = values.find(Param::from_slot(s));
                if (it == values.end())
                    throw std::invalid_argument("specialize: no value for " + Param::from_slot(s).name());
                if (it->second == 0)
                    throw std::domain_error("specialize: " + Param::from_slot(s).name() + " assigned zero");
                Rational base = e > 0 ? it->second : Rational(1 / it->second);
                for (int t = 0; t < std::abs(e); ++t) v *= base;
            }
            total += v;
        }
        return total;
    }

    /// Replace every parameter by a monomial image (used for tying parameters together).
    LaurentPoly substitute(const std::function<LaurentPoly(Param)>& image) const {
        LaurentPoly out;
        for (const auto& [mono, c] : terms_) {
            LaurentPoly t(c);
            for (int s = 0; s < kParamSlots; ++s) {
                int e = mono.exponent(s);
                if (e != 0) t *= image(Param::from_slot(s)).pow(e);
            }
            out += t;
        }
        return out;
    }

    /// Slots of all parameters that occur.
    std::vector<Param> params() const {
        std::vector<Param> out;
        for (int s = 0; s < kParamSlots; ++s)
            for (const auto& t : terms_)
                if (t.first.exponent(s) != 0) {
                    out.push_back(Param::from_slot(s));
                    break;
                }
        return out;
    }

    std::size_t hash() const {
        std::size_t h = terms_.size();
        for (const auto& [m, c] : terms_) h = h * 31 + m.hash();
        return h;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        // Print highest monomial first so q^2 + 1 reads naturally.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [mono, c] = *it;
            Rational mag = abs(c);
            bool neg = c < 0;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            std::string ms = mono.to_string();
            if (ms.empty()) {
                out += mag.get_str();
            } else {
                if (mag != 1) out += mag.get_str() + "*";
                out += ms;
            }
        }
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

private:
    std::vector<Term> terms_;
};

inline LaurentPoly operator*(const LaurentPoly& a, long c) { return a * LaurentPoly(c); }

/// Dense polynomial in beta over the rationals.
class BetaPoly {
public:
    BetaPoly() = default;
    explicit BetaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    BetaPoly(long c) : c_{Rational(c)} { trim(); }

    static BetaPoly beta() { return BetaPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(int k) const { return k < int(c_.size()) ? c_[k] : Rational(0); }

    BetaPoly& operator+=(const BetaPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
    friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) {
        for (auto& x : a.c_) x = -x;
        a += b;
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return BetaPoly(std::move(r));
    }
    friend BetaPoly operator*(BetaPoly a, const Rational& s) {
        for (auto& x : a.c_) x *= s;
        a.trim();
        return a;
    }

    Rational operator()(const Rational& x) const {
        Rational v(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    /// "1/8*b^4 + 5/12*b^3 + 3/8*b^2 + 1/12*b"
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = c_[k];
            if (c == 0) continue;
            bool neg = c < 0;
            Rational mag = abs(c);
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            if (k == 0) {
                out += mag.get_str();
                continue;
            }
            if (mag != 1) out += mag.get_str() + "*";
            out += "b";
            if (k > 1) out += "^" + std::to_string(k);
        }
        return out;
    }

    friend bool operator==(const BetaPoly&, const BetaPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// binom(beta + l - 1 - d, l) as a polynomial in beta.
inline BetaPoly beta_binomial(int l, int d) {
    if (l < 0) throw std::invalid_argument("beta_binomial: l must be nonnegative");
    BetaPoly r(1);
    Rational fact(1);
    for (int t = 0; t < l; ++t) {
        r = r * BetaPoly(std::vector<Rational>{Rational(l - 1 - d - t), Rational(1)});
        fact *= t + 1;
    }
    return r * Rational(1 / fact);
}

/// Lagrange interpolation through (xs[k], ys[k]).
inline BetaPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    BetaPoly out;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        BetaPoly basis(1);
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == k) continue;
            basis = basis * BetaPoly(std::vector<Rational>{Rational(-xs[j]), Rational(1)});
            denom *= xs[k] - xs[j];
        }
        out += basis * Rational(ys[k] / denom);
    }
    return out;
}

}  // namespace ncsylv

template <>
struct std::hash<ncsylv::Monomial> {
    std::size_t operator()(const ncsylv::Monomial& m) const noexcept { return m.hash(); }
};

#endif  // NCSYLV_COEFF_HPP
