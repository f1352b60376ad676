#ifndef NCSYLV_WEIGHTS_HPP
#define NCSYLV_WEIGHTS_HPP

// Word weights w(lambda, mu), weighted determinants, and bracket matrices.

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace ncsylv {

class WeightScheme {
public:
    enum class Kind { unit, single_q, multi_q };

    static WeightScheme unit() { return WeightScheme(Kind::unit, -1); }
    static WeightScheme single_q() { return WeightScheme(Kind::single_q, -1); }
    /// Independent q[i,j] for every i < j.
    static WeightScheme multi_q() { return WeightScheme(Kind::multi_q, -1); }
    /// q[i,j] for i <= n < j all equal to one shared parameter, printed as q.
    static WeightScheme block_constant(int n) {
        if (n < 0) throw std::invalid_argument("block_constant: n must be nonnegative");
        return WeightScheme(Kind::multi_q, n);
    }

    Kind kind() const { return kind_; }
    bool is_unit() const { return kind_ == Kind::unit; }
    bool is_block_constant() const { return kind_ == Kind::multi_q && block_ >= 0; }
    int block() const { return block_; }

    /// Exponent vector of q_ij, with q_ii = 1 and q_ji = q_ij^{-1}.
    Monomial q_monomial(int i, int j) const {
        if (i == j || kind_ == Kind::unit) return Monomial();
        int lo = std::min(i, j), hi = std::max(i, j);
        int e = i < j ? 1 : -1;
        if (kind_ == Kind::single_q || (block_ >= 0 && lo <= block_ && hi > block_)) return Monomial::of(Param::q(), e);
        return Monomial::of(Param::pair(lo, hi), e);
    }

    LaurentPoly q(int i, int j) const { return LaurentPoly(q_monomial(i, j), Rational(1)); }

    /// The parameter shared by the block i <= n < j, used by the q-scaled C matrix.
    LaurentPoly shared_q() const {
        if (kind_ == Kind::single_q || is_block_constant()) return LaurentPoly::param(Param::q());
        throw std::logic_error("weight scheme has no single shared q");
    }
    bool has_shared_q() const { return kind_ == Kind::single_q || is_block_constant(); }

    std::string describe() const {
        switch (kind_) {
            case Kind::unit: return "unit";
            case Kind::single_q: return "single-q";
            case Kind::multi_q:
                return block_ >= 0 ? "multi-q(block-constant n=" + std::to_string(block_) + ")" : "multi-q";
        }
        return "?";
    }

    friend bool operator==(const WeightScheme&, const WeightScheme&) = default;

private:
    WeightScheme(Kind k, int block) : kind_(k), block_(block) {}
    Kind kind_;
    int block_;
};

/// Weight of the word a_{lambda,mu}: 1, q^{inv mu - inv lambda}, or the
/// product over inversions of q_{mu_j mu_i} and q_{lambda_j lambda_i}^{-1}.
inline Monomial weight_monomial(std::span<const int> lambda, std::span<const int> mu, const WeightScheme& s) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("weight: row and column words differ in length");
    switch (s.kind()) {
        case WeightScheme::Kind::unit: return Monomial();
        case WeightScheme::Kind::single_q:
            return Monomial::of(Param::q(), inversion_count(mu) - inversion_count(lambda));
        case WeightScheme::Kind::multi_q: {
            Monomial w;
            for (std::size_t a = 0; a < mu.size(); ++a)
                for (std::size_t b = a + 1; b < mu.size(); ++b) {
                    if (mu[a] > mu[b]) w = w * s.q_monomial(mu[b], mu[a]);
                    if (lambda[a] > lambda[b]) w = w * s.q_monomial(lambda[b], lambda[a]).inverse();
                }
            return w;
        }
    }
    return Monomial();
}

inline LaurentPoly weight(std::span<const int> lambda, std::span<const int> mu, const WeightScheme& s) {
    return LaurentPoly(weight_monomial(lambda, mu, s), Rational(1));
}

inline LaurentPoly word_weight(const Word& w, const WeightScheme& s) {
    auto r = w.rows();
    auto c = w.cols();
    return weight(r, c, s);
}

/// Signed permutation expansion sum_sigma (-1)^inv(sigma) b_{sigma(1)1}...b_{sigma(k)k},
/// every expanded word a_{lambda,mu} multiplied by w(lambda, mu). The
/// expansion runs without reduction; the result is then placed in the
/// matrix's own truncation/reduction context.
inline Element det_weighted(const NCMatrix& m, const WeightScheme& s) {
    if (!m.is_square()) throw std::invalid_argument("det_weighted: matrix is not square");
    const std::size_t k = m.rows();
    const int order = m.order();
    std::vector<Element> cells;
    cells.reserve(k * k);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) cells.push_back(m.at(p, q).rebased(order, nullptr));

    Element expanded(order);
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool zero = false;
        for (std::size_t col = 0; col < k && !zero; ++col) zero = cells[sigma[col] * k + col].is_zero();
        if (zero) continue;
        Element prod = Element::one(order);
        for (std::size_t col = 0; col < k && !prod.is_zero(); ++col) prod = prod * cells[sigma[col] * k + col];
        if (inversion_count(sigma) % 2) prod = -prod;
        expanded += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    Element out(order, m.reducer());
    for (const auto& [w, c] : expanded.terms()) {
        if (s.is_unit())
            out.add_term(w, c);
        else
            out.add_term(w, c * word_weight(w, s));
    }
    return out;
}

/// I - A for a square labelled matrix.
inline NCMatrix identity_minus(const NCMatrix& a) {
    return NCMatrix::identity(a.row_labels(), a.order(), a.reducer()) - a;
}

/// det(I - A) through sum_J (-1)^{|J|} det A_J over label subsets J.
inline Element det_I_minus_subsets(const NCMatrix& a, const WeightScheme& s) {
    if (!a.is_square() || a.row_labels() != a.col_labels())
        throw std::invalid_argument("det_I_minus_subsets: matrix must be square with matching labels");
    const auto& labels = a.row_labels();
    const std::size_t k = labels.size();
    Element total(a.order(), a.reducer());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> sub;
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (1u << b)) sub.push_back(labels[b]);
        Element d = det_weighted(a.submatrix(sub, sub), s);
        total += (sub.size() % 2) ? -d : d;
    }
    return total;
}

/// A_[ij]: entry a_kl scaled by (q_jl if l > j) * (q_ki^{-1} if k < i), by labels.
/// With the unit scheme the matrix is returned unchanged.
inline NCMatrix bracket_matrix(const NCMatrix& a, int i, int j, const WeightScheme& s) {
    if (s.is_unit()) return a;
    return a.map_entries([&](int k, int l, const Element& e) {
        Monomial f;
        if (l > j) f = f * s.q_monomial(j, l);
        if (k < i) f = f * s.q_monomial(k, i).inverse();
        return f.is_one() ? e : e.scaled(LaurentPoly(f, Rational(1)));
    });
}

}  // namespace ncsylv

#endif  // NCSYLV_WEIGHTS_HPP
