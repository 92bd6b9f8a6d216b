#pragma once

// The group ring K[F_mu] and matrices over it.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "linkring/errors.hpp"
#include "linkring/free_group.hpp"
#include "linkring/laurent.hpp"
#include "linkring/matrix.hpp"
#include "linkring/scalar.hpp"

namespace linkring {

template <FieldElement K>
class GroupRingElem {
public:
    using TermMap = std::map<Word, K>;

    GroupRingElem() = default;
    GroupRingElem(FieldSpec field, int mu) : field_(field), mu_(mu) {}

    static GroupRingElem constant(FieldSpec field, int mu, const K& c) {
        GroupRingElem a(field, mu);
        a.add_term(Word(), c);
        return a;
    }

    static GroupRingElem word(FieldSpec field, int mu, const Word& w, const K& c) {
        GroupRingElem a(field, mu);
        a.add_term(w, c);
        return a;
    }

    static GroupRingElem word(FieldSpec field, int mu, const Word& w) {
        return word(field, mu, w, linkring::one<K>(field));
    }

    const FieldSpec& field() const { return field_; }
    int mu() const { return mu_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? linkring::zero<K>(field_) : it->second;
    }

    void add_term(const Word& w, const K& c) {
        if (linkring::is_zero(c)) return;
        if (w.max_generator() > mu_) throw invalid_argument("word '" + w.str() + "' exceeds mu");
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (linkring::is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Longest word in the support (0 for the zero element).
    std::size_t max_length() const {
        std::size_t m = 0;
        for (const auto& [w, c] : terms_) m = std::max(m, w.length());
        return m;
    }

    /// Augmentation: every z_i maps to 1.
    K augment() const {
        K s = linkring::zero<K>(field_);
        for (const auto& [w, c] : terms_) s += c;
        return s;
    }

    LaurentPoly<K> abelianize() const {
        LaurentPoly<K> p(field_, mu_);
        for (const auto& [w, c] : terms_) p.add_term(w.exponent_sums(mu_), c);
        return p;
    }

    GroupRingElem& operator+=(const GroupRingElem& o) {
        check(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    GroupRingElem& operator-=(const GroupRingElem& o) {
        check(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    GroupRingElem& operator*=(const K& s) {
        if (linkring::is_zero(s)) terms_.clear();
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
    friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
    friend GroupRingElem operator-(GroupRingElem a) {
        for (auto& [w, c] : a.terms_) c = -c;
        return a;
    }
    friend GroupRingElem operator*(const K& s, GroupRingElem a) { return a *= s; }

    /// Convolution: the coefficient of w is the sum of a_u b_v over u·v = w.
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) {
        a.check(b);
        GroupRingElem r(a.field_, a.mu_);
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) r.add_term(u * v, cu * cv);
        return r;
    }

    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
        return a.mu_ == b.mu_ && a.terms_ == b.terms_;
    }

private:
    void check(const GroupRingElem& o) const {
        if (mu_ != o.mu_) throw dimension_mismatch("group ring elements over different mu");
    }

    FieldSpec field_{};
    int mu_ = 0;
    TermMap terms_;
};

template <FieldElement K>
GroupRingElem<K> gr_mul(const GroupRingElem<K>& a, const GroupRingElem<K>& b) {
    return a * b;
}

template <FieldElement K>
class GroupRingMatrix {
public:
    using Elem = GroupRingElem<K>;

    GroupRingMatrix() = default;
    GroupRingMatrix(FieldSpec field, int mu, std::size_t rows, std::size_t cols)
        : field_(field), mu_(mu), rows_(rows), cols_(cols), entries_(rows * cols, Elem(field, mu)) {}

    static GroupRingMatrix identity(FieldSpec field, int mu, std::size_t n) {
        GroupRingMatrix m(field, mu, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Elem::constant(field, mu, linkring::one<K>(field));
        return m;
    }

    /// Matrix with constant entries taken from a coefficient matrix.
    static GroupRingMatrix constant(int mu, const Mat<K>& a) {
        GroupRingMatrix m(a.field(), mu, a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Elem::constant(a.field(), mu, a(i, j));
        return m;
    }

    const FieldSpec& field() const { return field_; }
    int mu() const { return mu_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Elem& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    /// Union of entry supports.
    std::set<Word> support() const {
        std::set<Word> s;
        for (const auto& e : entries_)
            for (const auto& [w, c] : e.terms()) s.insert(w);
        return s;
    }

    std::size_t max_length() const {
        std::size_t m = 0;
        for (const auto& e : entries_) m = std::max(m, e.max_length());
        return m;
    }

    /// Coefficient matrix of a word: the K-matrix d_w with d = sum_w w d_w.
    Mat<K> coefficient(const Word& w) const {
        Mat<K> c(field_, rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j).coefficient(w);
        return c;
    }

    bool is_identity() const { return *this == identity(field_, mu_, rows_) && square(); }

    GroupRingMatrix& operator+=(const GroupRingMatrix& o) {
        check_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    GroupRingMatrix& operator-=(const GroupRingMatrix& o) {
        check_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    friend GroupRingMatrix operator+(GroupRingMatrix a, const GroupRingMatrix& b) { return a += b; }
    friend GroupRingMatrix operator-(GroupRingMatrix a, const GroupRingMatrix& b) { return a -= b; }

    friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch("group ring matrix product: inner dimensions differ");
        if (a.mu_ != b.mu_) throw dimension_mismatch("group ring matrix product: mu differs");
        GroupRingMatrix c(a.field_, a.mu_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Elem& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b) {
        return a.mu_ == b.mu_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    void check_shape(const GroupRingMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || mu_ != o.mu_)
            throw dimension_mismatch("group ring matrices of different shape");
    }

    FieldSpec field_{};
    int mu_ = 0;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> entries_;
};

template <FieldElement K>
GroupRingMatrix<K> gr_mat_mul(const GroupRingMatrix<K>& a, const GroupRingMatrix<K>& b) {
    return a * b;
}

/// Entrywise augmentation.
template <FieldElement K>
Mat<K> augment(const GroupRingMatrix<K>& m) {
    Mat<K> a(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).augment();
    return a;
}

/// Entrywise abelianization into the commutative Laurent ring.
template <FieldElement K>
LaurentMatrix<K> abelianize(const GroupRingMatrix<K>& m) {
    LaurentMatrix<K> a(m.field(), m.mu(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).abelianize();
    return a;
}

}  // namespace linkring
