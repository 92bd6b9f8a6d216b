#pragma once

#include "linkring/linkring.hpp"

namespace fixtures {

using namespace linkring;

inline const FieldSpec Q = FieldSpec::rationals();
inline const FieldSpec F5 = FieldSpec::prime(5);

template <FieldElement K = Rational>
Mat<K> ints(const std::vector<std::vector<long>>& rows, FieldSpec f = FieldSpec::rationals()) {
    return Mat<K>::from_ints(f, rows);
}

inline Word w(const char* text) { return Word::parse(text); }

/// mu = 2, dims (2, 2): the near-projection whose covering matrix is
/// [[1,0,0,0],[0,z1,z2-1,0],[0,0,1,0],[z1-1,0,0,z2]].
template <FieldElement K = Rational>
SeifertModule<K> near_projection(FieldSpec f = FieldSpec::rationals()) {
    return SeifertModule<K>({2, 2}, Mat<K>::from_ints(f, {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}, {1, 0, 0, 1}}));
}

/// The same module after the split P_i = first coordinate (+) ⊕ second (-).
template <FieldElement K = Rational>
SeifertModule<K> near_projection_twisted(FieldSpec f = FieldSpec::rationals()) {
    return SeifertModule<K>({1, 1, 1, 1}, Mat<K>::from_ints(f, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}}));
}

template <FieldElement K = Rational>
SeifertModule<K> trefoil(FieldSpec f = FieldSpec::rationals()) {
    return SeifertModule<K>({2}, Mat<K>::from_ints(f, {{0, -1}, {1, 1}}));
}

/// Sum of c·w over (text, integer) pairs.
template <FieldElement K = Rational>
GroupRingElem<K> elem(int mu, std::initializer_list<std::pair<const char*, long>> terms,
                      FieldSpec f = FieldSpec::rationals()) {
    GroupRingElem<K> a(f, mu);
    for (auto [text, c] : terms) a.add_term(Word::parse(text), from_int<K>(f, c));
    return a;
}

}  // namespace fixtures
