#pragma once

// Truncated noncommutative power series K<<x_1..x_mu>>, the Magnus-Fox
// embedding z_j -> 1 + x_j, and invertibility certificates over K[F_mu].

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "linkring/errors.hpp"
#include "linkring/free_group.hpp"
#include "linkring/group_ring.hpp"
#include "linkring/matrix.hpp"

namespace linkring {

/// Noncommutative monomial x_{i_1} x_{i_2} ... as the index sequence (1-based).
using Monomial = std::vector<std::uint8_t>;

template <FieldElement K>
class TruncSeries {
public:
    using TermMap = std::map<Monomial, K>;

    TruncSeries() = default;
    TruncSeries(FieldSpec field, int mu, std::size_t degree) : field_(field), mu_(mu), degree_(degree) {}

    static TruncSeries constant(FieldSpec field, int mu, std::size_t degree, const K& c) {
        TruncSeries s(field, mu, degree);
        s.add_term({}, c);
        return s;
    }

    const FieldSpec& field() const { return field_; }
    int mu() const { return mu_; }
    std::size_t degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? linkring::zero<K>(field_) : it->second;
    }

    K coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? linkring::zero<K>(field_) : it->second;
    }

    /// Adds c·m unless m exceeds the truncation degree.
    void add_term(const Monomial& m, const K& c) {
        if (m.size() > degree_ || linkring::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (linkring::is_zero(it->second)) terms_.erase(it);
        }
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        TruncSeries r(a.field_, a.mu_, a.degree_);
        Monomial m;
        for (const auto& [ma, ca] : a.terms_) {
            if (ma.size() > a.degree_) continue;
            for (const auto& [mb, cb] : b.terms_) {
                if (ma.size() + mb.size() > a.degree_) continue;
                m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend TruncSeries operator*(const K& s, TruncSeries a) {
        if (linkring::is_zero(s)) a.terms_.clear();
        for (auto& [m, c] : a.terms_) c *= s;
        return a;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.mu_ == b.mu_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void check(const TruncSeries& o) const {
        if (mu_ != o.mu_ || degree_ != o.degree_) throw dimension_mismatch("series with different mu or degree");
    }

    FieldSpec field_{};
    int mu_ = 0;
    std::size_t degree_ = 0;
    TermMap terms_;
};

template <FieldElement K>
class TruncSeriesMatrix {
public:
    using Elem = TruncSeries<K>;

    TruncSeriesMatrix() = default;
    TruncSeriesMatrix(FieldSpec field, int mu, std::size_t degree, std::size_t rows, std::size_t cols)
        : field_(field), mu_(mu), degree_(degree), rows_(rows), cols_(cols),
          entries_(rows * cols, Elem(field, mu, degree)) {}

    static TruncSeriesMatrix identity(FieldSpec field, int mu, std::size_t degree, std::size_t n) {
        TruncSeriesMatrix m(field, mu, degree, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem::constant(field, mu, degree, linkring::one<K>(field));
        return m;
    }

    static TruncSeriesMatrix constant(int mu, std::size_t degree, const Mat<K>& a) {
        TruncSeriesMatrix m(a.field(), mu, degree, a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Elem::constant(a.field(), mu, degree, a(i, j));
        return m;
    }

    const FieldSpec& field() const { return field_; }
    int mu() const { return mu_; }
    std::size_t degree() const { return degree_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Mat<K> constant_term() const {
        Mat<K> c(field_, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j).constant_term();
        return c;
    }

    bool is_identity() const { return *this == identity(field_, mu_, degree_, rows_); }

    friend TruncSeriesMatrix operator+(TruncSeriesMatrix a, const TruncSeriesMatrix& b) {
        for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_.at(k);
        return a;
    }
    friend TruncSeriesMatrix operator-(TruncSeriesMatrix a, const TruncSeriesMatrix& b) {
        for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_.at(k);
        return a;
    }

    friend TruncSeriesMatrix operator*(const TruncSeriesMatrix& a, const TruncSeriesMatrix& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch("series matrix product: inner dimensions differ");
        TruncSeriesMatrix c(a.field_, a.mu_, a.degree_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend bool operator==(const TruncSeriesMatrix& a, const TruncSeriesMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    FieldSpec field_{};
    int mu_ = 0;
    std::size_t degree_ = 0;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> entries_;
};

namespace detail {

// Image of a single letter: z_j -> 1 + x_j, z_j^{-1} -> sum_k (-x_j)^k.
template <FieldElement K>
TruncSeries<K> embed_letter(FieldSpec field, int mu, std::size_t degree, Letter l) {
    TruncSeries<K> s(field, mu, degree);
    const auto j = static_cast<std::uint8_t>(l > 0 ? l : -l);
    const K one = linkring::one<K>(field);
    if (l > 0) {
        s.add_term({}, one);
        s.add_term({j}, one);
        return s;
    }
    Monomial m;
    K sign = one;
    for (std::size_t k = 0; k <= degree; ++k) {
        s.add_term(m, sign);
        m.push_back(j);
        sign = -sign;
    }
    return s;
}

}  // namespace detail

/// Magnus-Fox image of a group ring element, truncated above `degree`.
template <FieldElement K>
TruncSeries<K> embed(const GroupRingElem<K>& a, std::size_t degree) {
    const FieldSpec f = a.field();
    TruncSeries<K> out(f, a.mu(), degree);
    std::map<Letter, TruncSeries<K>> cache;
    for (const auto& [w, c] : a.terms()) {
        TruncSeries<K> img = TruncSeries<K>::constant(f, a.mu(), degree, c);
        for (Letter l : w.letters()) {
            auto it = cache.find(l);
            if (it == cache.end()) it = cache.emplace(l, detail::embed_letter<K>(f, a.mu(), degree, l)).first;
            img = img * it->second;
        }
        out += img;
    }
    return out;
}

template <FieldElement K>
TruncSeriesMatrix<K> embed(const GroupRingMatrix<K>& m, std::size_t degree) {
    TruncSeriesMatrix<K> s(m.field(), m.mu(), degree, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s(i, j) = embed(m(i, j), degree);
    return s;
}

/// Inverse modulo terms of degree > D, or nullopt when the constant term is
/// singular. With m = m0 (1 + g), g = m0^{-1}(m - m0) has no constant term,
/// so (1 + g)^{-1} = sum_{k <= D} (-g)^k is exact up to degree D.
template <FieldElement K>
std::optional<TruncSeriesMatrix<K>> series_mat_inverse(const TruncSeriesMatrix<K>& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("series_mat_inverse: matrix not square");
    auto m0_inv = try_inverse(m.constant_term());
    if (!m0_inv) return std::nullopt;
    const auto n = m.rows();
    const auto lift = TruncSeriesMatrix<K>::constant(m.mu(), m.degree(), *m0_inv);
    const auto id = TruncSeriesMatrix<K>::identity(m.field(), m.mu(), m.degree(), n);
    const auto neg_g = id - lift * m;  // = -g
    auto sum = id;
    auto power = id;
    for (std::size_t k = 1; k <= m.degree(); ++k) {
        power = power * neg_g;
        sum = sum + power;
    }
    return sum * lift;
}

template <FieldElement K>
struct BoundedInverseResult {
    std::optional<GroupRingMatrix<K>> inverse;  ///< verified two-sided inverse
    std::size_t bound = 0;                      ///< support bound L searched
    std::size_t unknowns = 0;
    std::size_t equations = 0;
};

/// Searches for X with every entry supported on words of length <= L and
/// X·d = d·X = 1. The left system is assembled by equating coefficients of
/// every word of length <= L + maxlen(supp d); the candidate is accepted only
/// after both products are checked exactly. A missing inverse means only that
/// none exists within the bound.
///
/// Throws augmentation_singular when augment(d) is singular: then no inverse
/// exists at all.
template <FieldElement K>
BoundedInverseResult<K> bounded_support_inverse(const GroupRingMatrix<K>& d, std::size_t bound) {
    if (!d.square()) throw dimension_mismatch("bounded_support_inverse: matrix not square");
    if (!try_inverse(augment(d))) throw augmentation_singular("augmentation of d is singular");

    const FieldSpec f = d.field();
    const int mu = d.mu();
    const std::size_t n = d.rows();
    const std::vector<Word> candidates = words_up_to(mu, bound);
    const std::size_t unknowns = candidates.size() * n;

    // Unknown (w, k) is the entry in column k of X_w, for one fixed row of X.
    // All rows of X share the coefficient matrix and differ only in the rhs.
    std::unordered_map<Word, std::size_t> word_index;
    for (std::size_t t = 0; t < candidates.size(); ++t) word_index.emplace(candidates[t], t);

    // Equation (u, c): sum_{w·v = u} sum_k X[r][k]_w d[k][c]_v = [u = 1][r = c].
    std::map<std::pair<Word, std::size_t>, std::vector<std::pair<std::size_t, K>>> equations;
    for (std::size_t t = 0; t < candidates.size(); ++t) {
        const Word& w = candidates[t];
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t c = 0; c < n; ++c)
                for (const auto& [v, coeff] : d(k, c).terms())
                    equations[{w * v, c}].emplace_back(t * n + k, coeff);
    }
    // Rows r of the identity need the equations at u = 1 to exist even if empty.
    for (std::size_t c = 0; c < n; ++c) equations.try_emplace({Word(), c});

    SparseSystem<K> system(f, unknowns, n);
    const K zero = linkring::zero<K>(f), one = linkring::one<K>(f);
    for (auto& [key, coeffs] : equations) {
        std::vector<K> rhs(n, zero);
        if (key.first.is_identity()) rhs[key.second] = one;
        system.add_equation(std::move(coeffs), rhs);
    }

    BoundedInverseResult<K> result;
    result.bound = bound;
    result.unknowns = unknowns;
    result.equations = equations.size();
    auto solution = system.solve();
    if (!solution) return result;

    GroupRingMatrix<K> x(f, mu, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t t = 0; t < candidates.size(); ++t)
            for (std::size_t k = 0; k < n; ++k) x(r, k).add_term(candidates[t], (*solution)[r][t * n + k]);

    const auto id = GroupRingMatrix<K>::identity(f, mu, n);
    if (x * d == id && d * x == id) result.inverse = std::move(x);
    return result;
}

}  // namespace linkring
