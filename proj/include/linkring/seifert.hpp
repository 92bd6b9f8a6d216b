#pragma once

// Seifert modules (P, e, {pi_i}) over a field, their covering presentations
// 1 - e + e·z, strong nilpotence, near-projection splittings and primitivity
// certificates.

#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkring/errors.hpp"
#include "linkring/free_group.hpp"
#include "linkring/group_ring.hpp"
#include "linkring/magnus_fox.hpp"
#include "linkring/matrix.hpp"

namespace linkring {

/// P = K^n split into mu coordinate blocks of sizes dims; pi_i is the
/// projection onto block i and is never stored.
template <FieldElement K>
class SeifertModule {
public:
    SeifertModule() = default;
    SeifertModule(std::vector<std::size_t> dims, Mat<K> e) : dims_(std::move(dims)), e_(std::move(e)) {
        if (dims_.empty()) throw invalid_argument("Seifert module needs mu >= 1");
        const std::size_t n = std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
        if (e_.rows() != n || e_.cols() != n)
            throw dimension_mismatch("Seifert module: e must be n x n with n = sum(dims)");
        offsets_.resize(dims_.size() + 1, 0);
        for (std::size_t i = 0; i < dims_.size(); ++i) offsets_[i + 1] = offsets_[i] + dims_[i];
    }

    static SeifertModule zero(FieldSpec field, int mu) {
        return SeifertModule(std::vector<std::size_t>(static_cast<std::size_t>(mu), 0), Mat<K>(field, 0, 0));
    }

    const FieldSpec& field() const { return e_.field(); }
    int mu() const { return static_cast<int>(dims_.size()); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t size() const { return e_.rows(); }
    const Mat<K>& e() const { return e_; }

    /// First coordinate of block i (0-based block index).
    std::size_t offset(std::size_t block) const { return offsets_[block]; }

    /// 0-based block containing coordinate c.
    std::size_t block_of(std::size_t c) const {
        std::size_t b = 0;
        while (offsets_[b + 1] <= c) ++b;
        return b;
    }

    /// pi_i as an n x n diagonal matrix (0-based block index).
    Mat<K> projection(std::size_t block) const {
        Mat<K> p(field(), size(), size());
        for (std::size_t c = offsets_[block]; c < offsets_[block + 1]; ++c) p(c, c) = e_.one();
        return p;
    }

    friend bool operator==(const SeifertModule& a, const SeifertModule& b) {
        return a.dims_ == b.dims_ && a.e_ == b.e_;
    }

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offsets_{0};
    Mat<K> e_;
};

/// The n x n matrix 1 - e + e·Z over K[F_mu], Z = diag(z_{block(c)}).
template <FieldElement K>
GroupRingMatrix<K> covering_presentation(const SeifertModule<K>& s) {
    const FieldSpec f = s.field();
    const int mu = s.mu();
    const std::size_t n = s.size();
    GroupRingMatrix<K> d(f, mu, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            auto& entry = d(r, c);
            const K& erc = s.e()(r, c);
            if (r == c) entry.add_term(Word(), s.e().one());
            entry.add_term(Word(), -erc);
            entry.add_term(Word::generator(static_cast<int>(s.block_of(c)) + 1), erc);
        }
    return d;
}

/// Least N with every length-N product e·pi_{i_1}·e·pi_{i_2}···e·pi_{i_N}
/// zero, computed with the descending flag W_0 = P, W_{k+1} = sum_i e pi_i W_k.
/// nullopt when the flag stabilises at a nonzero subspace.
template <FieldElement K>
std::optional<std::size_t> strong_nilpotence(const SeifertModule<K>& s) {
    const std::size_t n = s.size();
    if (n == 0) return 0;
    std::vector<Mat<K>> steps;
    for (std::size_t b = 0; b < s.dims().size(); ++b) steps.push_back(s.e() * s.projection(b));
    Mat<K> flag = Mat<K>::identity(s.field(), n);
    std::size_t dim = n;
    for (std::size_t k = 1; k <= n; ++k) {
        Mat<K> next(s.field(), n, 0);
        for (const auto& step : steps) next = hconcat(next, step * flag);
        next = column_space_basis(next);
        if (next.cols() == 0) return k;
        if (next.cols() == dim) return std::nullopt;
        dim = next.cols();
        flag = std::move(next);
    }
    return std::nullopt;
}

/// P_i = P_i^+ ⊕ P_i^- for every block, recorded as a block-diagonal change
/// of basis whose block-i columns list a basis of P_i^+ followed by one of P_i^-.
template <FieldElement K>
struct SplittingData {
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
    Mat<K> basis;

    friend bool operator==(const SplittingData&, const SplittingData&) = default;
};

template <FieldElement K>
SplittingData<K> trivial_split(const SeifertModule<K>& s, bool all_plus) {
    SplittingData<K> split;
    split.plus = all_plus ? s.dims() : std::vector<std::size_t>(s.dims().size(), 0);
    split.minus = all_plus ? std::vector<std::size_t>(s.dims().size(), 0) : s.dims();
    split.basis = Mat<K>::identity(s.field(), s.size());
    return split;
}

/// Empty string when the split is well formed for s, else the first problem.
template <FieldElement K>
std::string split_problem(const SeifertModule<K>& s, const SplittingData<K>& split) {
    const std::size_t mu = s.dims().size();
    if (split.plus.size() != mu || split.minus.size() != mu) return "split must list one (n+, n-) pair per block";
    for (std::size_t i = 0; i < mu; ++i)
        if (split.plus[i] + split.minus[i] != s.dims()[i]) return "n+ + n- != n_i for block " + std::to_string(i + 1);
    if (split.basis.rows() != s.size() || split.basis.cols() != s.size()) return "basis has the wrong size";
    for (std::size_t r = 0; r < s.size(); ++r)
        for (std::size_t c = 0; c < s.size(); ++c)
            if (s.block_of(r) != s.block_of(c) && !is_zero(split.basis(r, c))) return "basis is not block diagonal";
    if (!try_inverse(split.basis)) return "basis is singular";
    return {};
}

/// The 2mu-component module (P+ ⊕ P-, e') with
/// e' = [[e++, -e+-], [e-+, 1 - e--]] in the adapted basis. Its blocks are
/// ordered P_1^+, P_1^-, P_2^+, P_2^-, ...
template <FieldElement K>
SeifertModule<K> twisted_module(const SeifertModule<K>& s, const SplittingData<K>& split) {
    if (auto p = split_problem(s, split); !p.empty()) throw invalid_argument("invalid split: " + p);
    const std::size_t n = s.size();
    const Mat<K> adapted = inverse(split.basis) * s.e() * split.basis;
    std::vector<bool> minus(n, false);
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < s.dims().size(); ++i) {
        for (std::size_t t = split.plus[i]; t < s.dims()[i]; ++t) minus[s.offset(i) + t] = true;
        dims.push_back(split.plus[i]);
        dims.push_back(split.minus[i]);
    }
    Mat<K> twisted = adapted;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (minus[c]) twisted(r, c) = -twisted(r, c);
            if (minus[c] && r == c) twisted(r, c) += s.e().one();
        }
    return SeifertModule<K>(std::move(dims), std::move(twisted));
}

template <FieldElement K>
struct PrimitivityCertificate {
    GroupRingMatrix<K> inverse;               ///< two-sided inverse of 1 - e + e·z
    std::optional<SplittingData<K>> split;    ///< near-projection witness, when known
    std::optional<std::size_t> nilpotency;    ///< strong nilpotence index of e'
};

template <FieldElement K>
bool is_two_sided_inverse(const GroupRingMatrix<K>& x, const GroupRingMatrix<K>& d) {
    if (!x.square() || !d.square() || x.rows() != d.rows() || x.mu() != d.mu()) return false;
    const auto id = GroupRingMatrix<K>::identity(d.field(), d.mu(), d.rows());
    return x * d == id && d * x == id;
}

/// Inverse of 1 - e + e·z from a near-projection split. In the adapted basis
///   1 - e(1 - z) = (1 - e'·Δ)(Π+ + Π- z),  Δ = Π+(1 - z) + Π-(1 - z^{-1}),
/// and e'·Δ is nilpotent of index <= N when e' is strongly nilpotent of index N.
template <FieldElement K>
PrimitivityCertificate<K> near_projection_certificate(const SeifertModule<K>& s, const SplittingData<K>& split) {
    const SeifertModule<K> twisted = twisted_module(s, split);
    const auto index = strong_nilpotence(twisted);
    if (!index) throw not_near_projection("e' is not strongly nilpotent for the given split");

    const FieldSpec f = s.field();
    const int mu = s.mu();
    const std::size_t n = s.size();
    using Elem = GroupRingElem<K>;
    const K one = linkring::one<K>(f);

    GroupRingMatrix<K> delta(f, mu, n, n), shift(f, mu, n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t b = twisted.block_of(c);  // 2i for P_i^+, 2i+1 for P_i^-
        const int gen = static_cast<int>(b / 2) + 1;
        const bool minus = (b % 2) == 1;
        const Word z = Word::generator(gen, minus ? -1 : 1);
        delta(c, c) = Elem::constant(f, mu, one) - Elem::word(f, mu, z);
        shift(c, c) = minus ? Elem::word(f, mu, z) : Elem::constant(f, mu, one);
    }
    const GroupRingMatrix<K> step = GroupRingMatrix<K>::constant(mu, twisted.e()) * delta;
    GroupRingMatrix<K> sum = GroupRingMatrix<K>::identity(f, mu, n);
    GroupRingMatrix<K> power = sum;
    for (std::size_t k = 1; k < *index; ++k) {
        power = power * step;
        sum += power;
    }
    const auto basis = GroupRingMatrix<K>::constant(mu, split.basis);
    const auto basis_inv = GroupRingMatrix<K>::constant(mu, inverse(split.basis));
    PrimitivityCertificate<K> cert{basis * shift * sum * basis_inv, split, index};
    if (!is_two_sided_inverse(cert.inverse, covering_presentation(s)))
        throw internal_error("CertificateCheckFailed", "near-projection inverse failed the product check");
    return cert;
}

/// Re-checks a certificate against s: both exact product identities, and when
/// a split is attached, its validity and the strong nilpotence of e'.
template <FieldElement K>
bool verify_certificate(const SeifertModule<K>& s, const PrimitivityCertificate<K>& cert) {
    if (!is_two_sided_inverse(cert.inverse, covering_presentation(s))) return false;
    if (cert.split) {
        if (!split_problem(s, *cert.split).empty()) return false;
        auto index = strong_nilpotence(twisted_module(s, *cert.split));
        if (!index) return false;
        if (cert.nilpotency && *cert.nilpotency != *index) return false;
    }
    return true;
}

/// Bass-Heller-Swan splitting for mu = 1: with (e(1-e))^N = 0,
/// e_w = (e^N + (1-e)^N)^{-1} e^N is a projection, P+ = (1 - e_w)P and
/// P- = e_w P. nullopt when e(1-e) is not nilpotent.
template <FieldElement K>
std::optional<SplittingData<K>> bhs_split(const SeifertModule<K>& s) {
    if (s.mu() != 1) throw invalid_argument("bhs_split requires mu = 1");
    const std::size_t n = s.size();
    const Mat<K> id = Mat<K>::identity(s.field(), n);
    const Mat<K> complement = id - s.e();
    const auto index = nilpotency_index(s.e() * complement);
    if (!index) return std::nullopt;
    const std::size_t big_n = std::max<std::size_t>(*index, 1);
    const Mat<K> en = mat_pow(s.e(), big_n);
    const Mat<K> omega = inverse(en + mat_pow(complement, big_n)) * en;
    const Mat<K> plus = column_space_basis(id - omega);
    const Mat<K> minus = column_space_basis(omega);
    return SplittingData<K>{{plus.cols()}, {minus.cols()}, hconcat(plus, minus)};
}

namespace detail {

// Best-effort recovery of P_i^± from an inverse X of d = 1 - e + e·z:
//   P_i^+ = {x in P_i : z_i·X·(e x) has support in words starting with z_i}
//   P_i^- = {x in P_i : X·(1 - e)x has no P_i part at 1 and no support there}
template <FieldElement K>
std::optional<SplittingData<K>> split_from_inverse(const SeifertModule<K>& s, const GroupRingMatrix<K>& x) {
    const FieldSpec f = s.field();
    const std::size_t n = s.size();
    const Mat<K> id = Mat<K>::identity(f, n);
    const auto starts_with = [](const Word& w, int gen) { return !w.is_identity() && w.letters().front() == gen; };

    Mat<K> basis(f, n, n);
    SplittingData<K> split;
    for (std::size_t b = 0; b < s.dims().size(); ++b) {
        const int gen = static_cast<int>(b) + 1;
        const Word zi = Word::generator(gen);
        std::vector<std::size_t> block_cols, all_rows(n);
        for (std::size_t c = s.offset(b); c < s.offset(b) + s.dims()[b]; ++c) block_cols.push_back(c);
        std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});

        Mat<K> plus_conditions(f, 0, block_cols.size()), minus_conditions(f, 0, block_cols.size());
        const Mat<K> e_block = s.e().submatrix(all_rows, block_cols);
        const Mat<K> c_block = (id - s.e()).submatrix(all_rows, block_cols);
        for (const Word& w : x.support()) {
            const Mat<K> xw = x.coefficient(w);
            if (!starts_with(zi * w, gen))
                plus_conditions = hconcat(plus_conditions.transpose(), (xw * e_block).transpose()).transpose();
            if (starts_with(w, gen))
                minus_conditions = hconcat(minus_conditions.transpose(), (xw * c_block).transpose()).transpose();
        }
        const Mat<K> at_one = x.coefficient(Word()) * c_block;
        std::vector<std::size_t> own_rows, cols(block_cols.size());
        for (std::size_t c : block_cols) own_rows.push_back(c);
        std::iota(cols.begin(), cols.end(), std::size_t{0});
        minus_conditions = hconcat(minus_conditions.transpose(), at_one.submatrix(own_rows, cols).transpose()).transpose();

        const Mat<K> plus = kernel_basis(plus_conditions), minus = kernel_basis(minus_conditions);
        if (plus.cols() + minus.cols() != block_cols.size()) return std::nullopt;
        if (rank(hconcat(plus, minus)) != block_cols.size()) return std::nullopt;
        split.plus.push_back(plus.cols());
        split.minus.push_back(minus.cols());
        for (std::size_t r = 0; r < block_cols.size(); ++r) {
            for (std::size_t k = 0; k < plus.cols(); ++k) basis(s.offset(b) + r, s.offset(b) + k) = plus(r, k);
            for (std::size_t k = 0; k < minus.cols(); ++k)
                basis(s.offset(b) + r, s.offset(b) + plus.cols() + k) = minus(r, k);
        }
    }
    split.basis = std::move(basis);
    return split;
}

template <FieldElement K>
GroupRingMatrix<K> reverse_words(const GroupRingMatrix<K>& m) {
    GroupRingMatrix<K> r(m.field(), m.mu(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& [w, c] : m(i, j).terms()) r(i, j).add_term(w.reversed(), c);
    return r;
}

}  // namespace detail

template <FieldElement K>
struct PrimitivityResult {
    bool primitive = false;
    std::optional<PrimitivityCertificate<K>> certificate;
    std::string method;      ///< "bhs", "all-plus", "all-minus", "bounded-support"
    std::size_t bound = 0;   ///< support bound searched
    bool decisive = false;   ///< a negative answer is a proof (mu = 1)
};

/// Decides primitivity: BHS for mu = 1, then the trivial splits, then a
/// bounded-support inverse search. Every positive answer carries a verified
/// certificate; a negative answer for mu >= 2 only covers supports <= bound.
template <FieldElement K>
PrimitivityResult<K> primitivity_decide(const SeifertModule<K>& s, std::size_t bound) {
    if (bound < 1) throw invalid_argument("primitivity_decide needs a support bound >= 1");
    PrimitivityResult<K> result;
    result.bound = bound;
    const auto accept = [&](PrimitivityCertificate<K> cert, const char* method) {
        result.primitive = true;
        result.certificate = std::move(cert);
        result.method = method;
        return result;
    };

    if (s.mu() == 1) {
        if (auto split = bhs_split(s)) return accept(near_projection_certificate(s, *split), "bhs");
        result.decisive = true;
    }
    for (bool all_plus : {true, false}) {
        try {
            return accept(near_projection_certificate(s, trivial_split(s, all_plus)), all_plus ? "all-plus" : "all-minus");
        } catch (const not_near_projection&) {
        }
    }
    const auto d = covering_presentation(s);
    auto found = bounded_support_inverse(d, bound);
    if (!found.inverse) return result;

    PrimitivityCertificate<K> cert{*found.inverse, std::nullopt, std::nullopt};
    for (const auto& candidate : {*found.inverse, detail::reverse_words(*found.inverse)}) {
        auto split = detail::split_from_inverse(s, candidate);
        if (!split) continue;
        try {
            auto witnessed = near_projection_certificate(s, *split);
            cert.split = witnessed.split;
            cert.nilpotency = witnessed.nilpotency;
            break;
        } catch (const error&) {
        }
    }
    return accept(std::move(cert), "bounded-support");
}

/// Blockwise interleaved direct sum: block i of the result holds block i of
/// a followed by block i of b.
template <FieldElement K>
SeifertModule<K> direct_sum(const SeifertModule<K>& a, const SeifertModule<K>& b) {
    if (a.mu() != b.mu()) throw dimension_mismatch("direct_sum: mu differs");
    if (!(a.field() == b.field())) throw field_mismatch("direct_sum: fields differ");
    std::vector<std::size_t> dims(a.dims().size());
    for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims()[i] + b.dims()[i];
    const std::size_t n = a.size() + b.size();
    std::vector<std::size_t> place_a(a.size()), place_b(b.size());
    std::size_t pos = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        for (std::size_t t = 0; t < a.dims()[i]; ++t) place_a[a.offset(i) + t] = pos++;
        for (std::size_t t = 0; t < b.dims()[i]; ++t) place_b[b.offset(i) + t] = pos++;
    }
    Mat<K> e(a.field(), n, n);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) e(place_a[r], place_a[c]) = a.e()(r, c);
    for (std::size_t r = 0; r < b.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c) e(place_b[r], place_b[c]) = b.e()(r, c);
    return SeifertModule<K>(std::move(dims), std::move(e));
}

template <FieldElement K>
struct SeifertMorphism {
    SeifertModule<K> source;
    SeifertModule<K> target;
    Mat<K> g;  ///< target.size() x source.size()
};

/// Empty string when g is block diagonal and g·e_source = e_target·g.
template <FieldElement K>
std::string morphism_problem(const SeifertMorphism<K>& m) {
    if (m.source.mu() != m.target.mu()) return "source and target have different mu";
    if (m.g.rows() != m.target.size() || m.g.cols() != m.source.size()) return "g has the wrong shape";
    for (std::size_t r = 0; r < m.g.rows(); ++r)
        for (std::size_t c = 0; c < m.g.cols(); ++c)
            if (m.target.block_of(r) != m.source.block_of(c) && !is_zero(m.g(r, c)))
                return "g does not preserve the block decomposition";
    if (!(m.g * m.source.e() == m.target.e() * m.g)) return "g does not intertwine e";
    return {};
}

template <FieldElement K>
bool morphism_check(const SeifertMorphism<K>& m) {
    return morphism_problem(m).empty();
}

}  // namespace linkring
