#pragma once

// Commutative invariants of coverings: the Alexander polynomial (mu = 1), the
// abelianized determinant class of a presentation, and alternating torsion
// products of chains of Seifert modules.

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "linkring/errors.hpp"
#include "linkring/group_ring.hpp"
#include "linkring/laurent.hpp"
#include "linkring/seifert.hpp"

namespace linkring {

/// Normalized det of the abelianized d; throws zero_determinant when it vanishes.
template <FieldElement K>
LaurentPoly<K> abel_det_class(const GroupRingMatrix<K>& d) {
    if (!d.square()) throw dimension_mismatch("abel_det_class: matrix is not square");
    auto det = determinant(abelianize(d));
    if (det.is_zero()) throw zero_determinant("the abelianized determinant is zero");
    return det.normalized();
}

template <FieldElement K>
LaurentPoly<K> alexander(const SeifertModule<K>& s) {
    if (s.mu() != 1) throw invalid_argument("alexander requires mu = 1");
    return abel_det_class(covering_presentation(s));
}

namespace detail {

/// gcd of the numerators over lcm of the denominators of the coefficients.
inline Rational content(const LaurentPoly<Rational>& p) {
    mpz_class num = 0, den = 1;
    for (const auto& [e, c] : p.terms()) {
        num = gcd(num, c.get_num());
        den = lcm(den, c.get_den());
    }
    return Rational(num, den);
}

}  // namespace detail

/// prod_r abel_det_class(cover(S_r))^{(-1)^r}. Equal factors on both sides
/// cancel first; the rest is reduced by exact division, and by a gcd when
/// mu = 1.
template <FieldElement K>
TorsionClass<K> torsion(const std::vector<SeifertModule<K>>& chain) {
    if (chain.empty()) throw invalid_argument("torsion of an empty chain");
    const FieldSpec f = chain.front().field();
    const int mu = chain.front().mu();
    std::vector<LaurentPoly<K>> num, den;
    for (std::size_t r = 0; r < chain.size(); ++r) {
        if (chain[r].mu() != mu) throw dimension_mismatch("torsion: chain modules have different mu");
        if (!(chain[r].field() == f)) throw field_mismatch("torsion: chain modules over different fields");
        auto factor = abel_det_class(covering_presentation(chain[r]));
        auto& other = r % 2 == 0 ? den : num;
        auto hit = std::find(other.begin(), other.end(), factor);
        if (hit != other.end())
            other.erase(hit);
        else
            (r % 2 == 0 ? num : den).push_back(std::move(factor));
    }
    auto product = [&](const std::vector<LaurentPoly<K>>& fs) {
        auto p = LaurentPoly<K>::one(f, mu);
        for (const auto& x : fs) p = p * x;
        return p;
    };
    TorsionClass<K> t{product(num), product(den)};
    if (auto q = divide_exact(t.numerator, t.denominator)) {
        t.numerator = *q;
        t.denominator = LaurentPoly<K>::one(f, mu);
    } else if (mu == 1) {
        const auto g = gcd_univariate(t.numerator, t.denominator);
        t.numerator = *divide_exact(t.numerator, g);
        t.denominator = *divide_exact(t.denominator, g);
    }
    t.numerator = t.numerator.normalized();
    t.denominator = t.denominator.normalized();
    if constexpr (std::is_same_v<K, Rational>) {
        // Scalars cancel in the fraction: make the denominator a primitive integer polynomial.
        const auto scale = LaurentPoly<K>::constant(f, mu, Rational(1) / detail::content(t.denominator));
        t.numerator = t.numerator * scale;
        t.denominator = t.denominator * scale;
    }
    return t;
}

}  // namespace linkring
