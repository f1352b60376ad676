#ifndef NCSYLV_LINALG_HPP
#define NCSYLV_LINALG_HPP

// Incremental sparse row echelon form, used to decide whether a vector lies in
// the span of a set of generator rows. Works over the rationals, or
// fraction-free over Laurent polynomials (the span is then taken over the
// field of rational functions in the parameters).

#include <map>
#include <utility>
#include <vector>

#include "coeff.hpp"

namespace ncsylv {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static bool is_zero(const Rational& a) { return a == 0; }
    static bool is_unit(const Rational& a) { return a != 0; }
    static Rational div(const Rational& a, const Rational& b) { return a / b; }
    static std::string str(const Rational& a) { return a.get_str(); }
};

template <>
struct ScalarOps<LaurentPoly> {
    static bool is_zero(const LaurentPoly& a) { return a.is_zero(); }
    static bool is_unit(const LaurentPoly& a) { return a.is_monomial(); }
    static LaurentPoly div(const LaurentPoly& a, const LaurentPoly& b) { return a * b.inverse(); }
    static std::string str(const LaurentPoly& a) { return a.to_string(); }
};

template <class S>
using SparseRow = std::vector<std::pair<int, S>>;  // sorted by column, no zeros

template <class S>
class SpanTester {
public:
    using Row = SparseRow<S>;
    using Ops = ScalarOps<S>;

    /// Adds a generator. Returns false if it was already in the span.
    bool add(Row r) {
        while (!r.empty()) {
            auto it = pivots_.find(r.front().first);
            if (it == pivots_.end()) {
                pivots_.emplace(r.front().first, std::move(r));
                return true;
            }
            Row& p = it->second;
            if (!Ops::is_unit(p.front().second) && Ops::is_unit(r.front().second)) {
                // Keep invertible leading coefficients as pivots when possible.
                std::swap(p, r);
            }
            eliminate(r, p);
        }
        return false;
    }

    /// Reduces t against the pivots; t is in the span iff the result is empty.
    /// Stops at the first column that no pivot can clear.
    Row residual(Row t) const {
        while (!t.empty()) {
            auto it = pivots_.find(t.front().first);
            if (it == pivots_.end()) break;
            eliminate(t, it->second);
        }
        return t;
    }

    bool contains(Row t) const { return residual(std::move(t)).empty(); }
    std::size_t rank() const { return pivots_.size(); }

private:
    // Clears the leading entry of r using pivot row p (same leading column).
    static void eliminate(Row& r, const Row& p) {
        const S& a = p.front().second;
        const S& b = r.front().second;
        if (Ops::is_unit(a)) {
            S f = Ops::div(b, a);
            r = combine(S(1), r, f, p);
        } else {
            // Fraction-free step a*r - b*p; scaling r by a nonzero a keeps span membership.
            S bb = b;
            r = combine(a, r, bb, p);
        }
    }

    // Returns s*r - f*p with the leading column cancelled.
    static Row combine(const S& s, const Row& r, const S& f, const Row& p) {
        Row out;
        out.reserve(r.size() + p.size());
        auto x = r.begin();
        auto y = p.begin();
        bool scale = !(s == S(1));
        while (x != r.end() || y != p.end()) {
            if (y == p.end() || (x != r.end() && x->first < y->first)) {
                out.emplace_back(x->first, scale ? S(s * x->second) : x->second);
                ++x;
            } else if (x == r.end() || y->first < x->first) {
                out.emplace_back(y->first, S(-(f * y->second)));
                ++y;
            } else {
                S v = (scale ? S(s * x->second) : x->second) - S(f * y->second);
                if (!Ops::is_zero(v)) out.emplace_back(x->first, std::move(v));
                ++x;
                ++y;
            }
        }
        return out;
    }

    std::map<int, Row> pivots_;
};

}  // namespace ncsylv

#endif  // NCSYLV_LINALG_HPP
