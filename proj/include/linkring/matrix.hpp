#pragma once

// Dense exact linear algebra over a FieldSpec-described field.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "linkring/errors.hpp"
#include "linkring/scalar.hpp"

namespace linkring {

template <FieldElement K>
class Mat {
public:
    Mat() = default;
    Mat(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, linkring::zero<K>(field)) {}
    Mat(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<K> data)
        : field_(field), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw dimension_mismatch("Mat: entries length != rows*cols");
    }

    static Mat identity(FieldSpec field, std::size_t n) {
        Mat m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = linkring::one<K>(field);
        return m;
    }

    /// Builds from small integer literals, row-major.
    static Mat from_ints(FieldSpec field, const std::vector<std::vector<long>>& rows) {
        std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        Mat m(field, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw dimension_mismatch("ragged integer matrix");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = linkring::from_int<K>(field, rows[i][j]);
        }
        return m;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const std::vector<K>& data() const { return data_; }

    K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    K zero() const { return linkring::zero<K>(field_); }
    K one() const { return linkring::one<K>(field_); }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const K& x) { return linkring::is_zero(x); });
    }

    bool is_identity() const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? one() : zero())) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
        Mat s(field_, rs.size(), cs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
        return s;
    }

    Mat column(std::size_t j) const {
        Mat c(field_, rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    Mat& operator+=(const Mat& o) {
        check_same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Mat& operator*=(const K& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator-(const Mat& a) {
        Mat r(a.field_, a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = -a.data_[k];
        return r;
    }
    friend Mat operator*(const K& s, Mat a) { return a *= s; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch("Mat product: inner dimensions differ");
        Mat c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (linkring::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << linkring::to_string(m(i, j));
            os << ']';
        }
        return os << ']';
    }

private:
    void check_same_shape(const Mat& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_mismatch(std::string("Mat ") + op + ": shapes differ");
    }

    FieldSpec field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

/// Horizontal concatenation [a | b].
template <FieldElement K>
Mat<K> hconcat(const Mat<K>& a, const Mat<K>& b) {
    if (a.rows() != b.rows()) throw dimension_mismatch("hconcat: row counts differ");
    Mat<K> r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

/// Block-diagonal sum diag(a, b).
template <FieldElement K>
Mat<K> block_diag(const Mat<K>& a, const Mat<K>& b) {
    Mat<K> r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

template <FieldElement K>
Mat<K> mat_pow(const Mat<K>& m, std::size_t k) {
    if (!m.square()) throw dimension_mismatch("mat_pow: matrix not square");
    Mat<K> r = Mat<K>::identity(m.field(), m.rows());
    for (std::size_t i = 0; i < k; ++i) r = r * m;
    return r;
}

template <FieldElement K>
struct RowEchelon {
    Mat<K> reduced;                  ///< reduced row echelon form
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form. Pivots are the
/// first nonzero entry scanning columns left to right, so the result is a
/// deterministic function of the input.
template <FieldElement K>
RowEchelon<K> row_reduce(Mat<K> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        K inv = inverse(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            K f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <FieldElement K>
std::size_t rank(const Mat<K>& m) {
    return row_reduce(m).pivots.size();
}

template <FieldElement K>
std::optional<Mat<K>> try_inverse(const Mat<K>& m) {
    if (!m.square()) throw dimension_mismatch("inverse: matrix not square");
    const std::size_t n = m.rows();
    auto ech = row_reduce(hconcat(m, Mat<K>::identity(m.field(), n)));
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) return std::nullopt;
    std::vector<std::size_t> rows(n), cols(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = i;
        cols[i] = n + i;
    }
    return ech.reduced.submatrix(rows, cols);
}

/// Exact inverse; throws not_invertible when rank < size.
template <FieldElement K>
Mat<K> inverse(const Mat<K>& m) {
    auto inv = try_inverse(m);
    if (!inv) throw not_invertible("matrix of size " + std::to_string(m.rows()) + " is singular");
    return *std::move(inv);
}

/// Columns form a basis of the null space {x : m x = 0}.
template <FieldElement K>
Mat<K> kernel_basis(const Mat<K>& m) {
    auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Mat<K> basis(m.field(), m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = m.one();
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) basis(ech.pivots[r], k) = -ech.reduced(r, free[k]);
    }
    return basis;
}

/// Columns form a basis of the column space, chosen among the columns of m
/// (the pivot columns).
template <FieldElement K>
Mat<K> column_space_basis(const Mat<K>& m) {
    auto ech = row_reduce(m);
    std::vector<std::size_t> rows(m.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return m.submatrix(rows, ech.pivots);
}

/// Sum of subspaces given by spanning columns; result has independent columns.
template <FieldElement K>
Mat<K> subspace_sum(const Mat<K>& a, const Mat<K>& b) {
    return column_space_basis(hconcat(a, b));
}

template <FieldElement K>
struct Cokernel {
    Mat<K> proj;                    ///< codomain -> codomain/im(m), in basis coordinates
    std::vector<std::size_t> basis; ///< codomain coordinates spanning a complement of im(m)
};

/// Coordinate model of codomain/im(m). The complement basis is picked
/// greedily from the standard basis vectors e_0, e_1, ...; proj∘m = 0 and
/// proj restricted to the basis columns is the identity.
template <FieldElement K>
Cokernel<K> cokernel_with_section(const Mat<K>& m) {
    const std::size_t n = m.rows();
    Mat<K> image = column_space_basis(m);
    const std::size_t r = image.cols();

    // Greedy completion: e_j joins the basis iff it is independent of the
    // image plus the coordinates already chosen. Row-reducing [image | I]
    // gives exactly that set as the pivot columns beyond the image block.
    auto ech = row_reduce(hconcat(image, Mat<K>::identity(m.field(), n)));
    std::vector<std::size_t> basis;
    for (auto c : ech.pivots)
        if (c >= r) basis.push_back(c - r);

    Mat<K> frame(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) frame(i, j) = image(i, j);
        for (std::size_t k = 0; k < basis.size(); ++k) frame(i, r + k) = (i == basis[k]) ? m.one() : m.zero();
    }
    Mat<K> inv = inverse(frame);
    std::vector<std::size_t> rows(basis.size()), cols(n);
    for (std::size_t k = 0; k < basis.size(); ++k) rows[k] = r + k;
    for (std::size_t i = 0; i < n; ++i) cols[i] = i;
    return {inv.submatrix(rows, cols), std::move(basis)};
}

/// Least N with m^N = 0, or nullopt when m is not nilpotent. The zero matrix
/// of positive size has index 1; the empty matrix has index 0.
template <FieldElement K>
std::optional<std::size_t> nilpotency_index(const Mat<K>& m) {
    if (!m.square()) throw dimension_mismatch("nilpotency_index: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 0;
    Mat<K> power = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (power.is_zero()) return k;
        power = power * m;
    }
    return std::nullopt;
}

/// Sparse exact linear system A X = B with several right-hand sides, solved by
/// incremental sparse elimination. Used where dense elimination would be
/// wasteful (coefficient-equated group ring systems).
template <FieldElement K>
class SparseSystem {
public:
    using Row = std::vector<std::pair<std::size_t, K>>;  // sorted by column

    SparseSystem(FieldSpec field, std::size_t unknowns, std::size_t rhs_count)
        : field_(field), unknowns_(unknowns), rhs_count_(rhs_count) {}

    /// Adds one equation; `coeffs` need not be sorted and may repeat columns.
    /// `rhs` is indexed by right-hand side.
    void add_equation(std::vector<std::pair<std::size_t, K>> coeffs, const std::vector<K>& rhs) {
        std::map<std::size_t, K> acc;
        for (auto& [c, v] : coeffs) {
            auto [it, fresh] = acc.try_emplace(c, v);
            if (!fresh) it->second += v;
        }
        for (std::size_t k = 0; k < rhs.size(); ++k) {
            if (is_zero(rhs[k])) continue;
            acc.emplace(unknowns_ + k, rhs[k]);
        }
        Row row;
        for (auto& [c, v] : acc)
            if (!is_zero(v)) row.emplace_back(c, v);
        reduce_and_insert(std::move(row));
    }

    /// Solution for every right-hand side (free unknowns set to zero), or
    /// nullopt when some right-hand side is inconsistent.
    std::optional<std::vector<std::vector<K>>> solve() const {
        for (auto& [pivot, row] : pivots_)
            if (pivot >= unknowns_) return std::nullopt;
        std::vector<std::vector<K>> sol(rhs_count_, std::vector<K>(unknowns_, linkring::zero<K>(field_)));
        // Back substitution from the largest pivot downwards.
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const auto& [pivot, row] = *it;
            const K& lead = row.front().second;
            for (std::size_t k = 0; k < rhs_count_; ++k) {
                K value = linkring::zero<K>(field_);
                for (std::size_t t = 1; t < row.size(); ++t) {
                    auto [c, v] = row[t];
                    if (c >= unknowns_) {
                        if (c - unknowns_ == k) value += v;
                    } else {
                        value -= v * sol[k][c];
                    }
                }
                sol[k][pivot] = value / lead;
            }
        }
        return sol;
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    void reduce_and_insert(Row row) {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                pivots_.emplace(row.front().first, std::move(row));
                return;
            }
            row = axpy(row, it->second);
        }
    }

    // row - (row.lead / piv.lead) * piv, dropping the leading column.
    Row axpy(const Row& row, const Row& piv) const {
        K f = row.front().second / piv.front().second;
        Row out;
        out.reserve(row.size() + piv.size());
        std::size_t a = 1, b = 1;
        while (a < row.size() || b < piv.size()) {
            if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
                out.push_back(row[a++]);
            } else if (a == row.size() || piv[b].first < row[a].first) {
                out.emplace_back(piv[b].first, -(f * piv[b].second));
                ++b;
            } else {
                K v = row[a].second - f * piv[b].second;
                if (!is_zero(v)) out.emplace_back(row[a].first, v);
                ++a;
                ++b;
            }
        }
        return out;
    }

    FieldSpec field_;
    std::size_t unknowns_;
    std::size_t rhs_count_;
    std::map<std::size_t, Row> pivots_;
};

}  // namespace linkring
