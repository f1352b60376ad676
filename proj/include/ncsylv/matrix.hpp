#ifndef NCSYLV_MATRIX_HPP
#define NCSYLV_MATRIX_HPP

// Matrices over the free algebra. Rows and columns carry integer labels so
// submatrices keep the indices of the big matrix they came from.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element.hpp"

namespace ncsylv {

inline std::vector<int> label_range(int first, int last) {
    std::vector<int> v;
    for (int i = first; i <= last; ++i) v.push_back(i);
    return v;
}

class NCMatrix {
public:
    NCMatrix(std::vector<int> row_labels, std::vector<int> col_labels, int order = kUnbounded,
             ReducerPtr reducer = nullptr)
        : rows_(std::move(row_labels)),
          cols_(std::move(col_labels)),
          order_(order),
          reducer_(std::move(reducer)),
          cells_(rows_.size() * cols_.size(), Element(order, reducer_)) {}

    static NCMatrix identity(const std::vector<int>& labels, int order = kUnbounded, ReducerPtr r = nullptr) {
        NCMatrix m(labels, labels, order, r);
        for (std::size_t p = 0; p < labels.size(); ++p) m.at(p, p) = Element::one(order, r);
        return m;
    }

    /// Entry (r, c) is the letter a[r,c] for each row label r and column label c.
    static NCMatrix generic(const std::vector<int>& row_labels, const std::vector<int>& col_labels,
                            int order = kUnbounded, ReducerPtr r = nullptr) {
        NCMatrix m(row_labels, col_labels, order, r);
        for (std::size_t p = 0; p < row_labels.size(); ++p)
            for (std::size_t q = 0; q < col_labels.size(); ++q)
                m.at(p, q) = Element::letter(Letter(row_labels[p], col_labels[q]), order, r);
        return m;
    }

    static NCMatrix generic(int m, int order = kUnbounded, ReducerPtr r = nullptr) {
        auto labels = label_range(1, m);
        return generic(labels, labels, order, r);
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_.size(); }
    bool is_square() const { return rows_.size() == cols_.size(); }
    const std::vector<int>& row_labels() const { return rows_; }
    const std::vector<int>& col_labels() const { return cols_; }
    int order() const { return order_; }
    const ReducerPtr& reducer() const { return reducer_; }

    Element& at(std::size_t p, std::size_t q) { return cells_[p * cols_.size() + q]; }
    const Element& at(std::size_t p, std::size_t q) const { return cells_[p * cols_.size() + q]; }

    std::size_t row_position(int label) const { return position(rows_, label, "row"); }
    std::size_t col_position(int label) const { return position(cols_, label, "column"); }

    Element& entry(int r, int c) { return at(row_position(r), col_position(c)); }
    const Element& entry(int r, int c) const { return at(row_position(r), col_position(c)); }

    NCMatrix submatrix(const std::vector<int>& row_labels, const std::vector<int>& col_labels) const {
        NCMatrix m(row_labels, col_labels, order_, reducer_);
        for (std::size_t p = 0; p < row_labels.size(); ++p)
            for (std::size_t q = 0; q < col_labels.size(); ++q) m.at(p, q) = entry(row_labels[p], col_labels[q]);
        return m;
    }

    /// The matrix without row label r and column label c.
    NCMatrix minor(int r, int c) const {
        std::vector<int> rs, cs;
        for (int x : rows_)
            if (x != r) rs.push_back(x);
        for (int x : cols_)
            if (x != c) cs.push_back(x);
        if (rs.size() == rows_.size() || cs.size() == cols_.size())
            throw std::out_of_range("minor: label not present");
        return submatrix(rs, cs);
    }

    NCMatrix& operator+=(const NCMatrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] += o.cells_[k];
        return *this;
    }
    NCMatrix& operator-=(const NCMatrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < cells_.size(); ++k) cells_[k] -= o.cells_[k];
        return *this;
    }
    friend NCMatrix operator+(NCMatrix a, const NCMatrix& b) { return a += b; }
    friend NCMatrix operator-(NCMatrix a, const NCMatrix& b) { return a -= b; }

    friend NCMatrix operator*(const NCMatrix& a, const NCMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner labels differ");
        NCMatrix r(a.rows_, b.cols_, std::min(a.order_, b.order_), a.reducer_ ? a.reducer_ : b.reducer_);
        for (std::size_t p = 0; p < a.rows(); ++p)
            for (std::size_t q = 0; q < b.cols(); ++q) {
                Element sum(r.order_, r.reducer_);
                for (std::size_t k = 0; k < a.cols(); ++k) {
                    const Element& x = a.at(p, k);
                    const Element& y = b.at(k, q);
                    if (!x.is_zero() && !y.is_zero()) sum += x * y;
                }
                r.at(p, q) = std::move(sum);
            }
        return r;
    }

    bool is_zero() const {
        return std::all_of(cells_.begin(), cells_.end(), [](const Element& e) { return e.is_zero(); });
    }

    /// Applies f to every entry, passing the row and column labels.
    template <class F>
    NCMatrix map_entries(F f) const {
        NCMatrix m(rows_, cols_, order_, reducer_);
        for (std::size_t p = 0; p < rows(); ++p)
            for (std::size_t q = 0; q < cols(); ++q) m.at(p, q) = f(rows_[p], cols_[q], at(p, q));
        return m;
    }

private:
    static std::size_t position(const std::vector<int>& labels, int label, const char* what) {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end()) throw std::out_of_range(std::string("no ") + what + " labelled " + std::to_string(label));
        return std::size_t(it - labels.begin());
    }
    void check_same_shape(const NCMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shapes differ");
    }

    std::vector<int> rows_, cols_;
    int order_;
    ReducerPtr reducer_;
    std::vector<Element> cells_;
};

/// (I - A)^{-1} = I + A + A^2 + ... up to the truncation order. Entries of A
/// must have no constant term.
inline NCMatrix neumann_inverse(const NCMatrix& a) {
    if (!a.is_square() || a.row_labels() != a.col_labels())
        throw std::invalid_argument("neumann_inverse: matrix must be square with matching labels");
    if (a.order() == kUnbounded) throw std::invalid_argument("neumann_inverse needs a finite truncation order");
    for (std::size_t p = 0; p < a.rows(); ++p)
        for (std::size_t q = 0; q < a.cols(); ++q)
            if (!a.at(p, q).constant_term().is_zero())
                throw std::domain_error("neumann_inverse: entries must have no constant term");
    NCMatrix total = NCMatrix::identity(a.row_labels(), a.order(), a.reducer());
    NCMatrix power = total;
    for (int k = 1; k <= a.order(); ++k) {
        power = power * a;
        if (power.is_zero()) break;
        total += power;
    }
    return total;
}

/// Images of outer letters (the c[i,j]) in the free algebra.
using Embedding = std::map<Letter, Element>;

/// A matrix over an abstract outer alphabet together with the embedding of
/// each outer letter.
struct SymbolicMatrix {
    NCMatrix outer;
    Embedding embedding;
};

/// Replaces each outer word c_{i1 j1}...c_{ik jk} by the product of embedded
/// elements, keeping the outer coefficient.
inline Element substitute(const Element& outer, const Embedding& embedding, int order, ReducerPtr reducer = nullptr) {
    Element result(order, reducer);
    std::map<Letter, Element> images;
    for (const auto& [l, e] : embedding) images.emplace(l, e.rebased(order, reducer));
    std::unordered_map<Word, Element> prefix;
    prefix.emplace(Word(), Element::one(order, reducer));
    auto product_of = [&](const Word& w) -> const Element& {
        std::size_t known = w.size();
        while (!prefix.count(w.substr(0, known))) --known;
        for (std::size_t len = known + 1; len <= w.size(); ++len) {
            Letter l = w[len - 1];
            auto it = images.find(l);
            if (it == images.end()) throw std::out_of_range("substitute: no embedding for " + l.to_string('c'));
            Element next = prefix.at(w.substr(0, len - 1)) * it->second;
            prefix.emplace(w.substr(0, len), std::move(next));
        }
        return prefix.at(w);
    };
    for (const auto& [w, c] : outer.sorted_terms()) result += product_of(w).scaled(c);
    return result;
}

}  // namespace ncsylv

#endif  // NCSYLV_MATRIX_HPP
