#pragma once

// Seeded generators of random words, group ring matrices and Seifert modules
// for property tests and the CLI selftest.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "linkring/free_group.hpp"
#include "linkring/group_ring.hpp"
#include "linkring/matrix.hpp"
#include "linkring/seifert.hpp"

namespace linkring::random {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Integer in [-range, range], or a small fraction over Q when `fractions`.
template <FieldElement K>
K scalar(Rng& rng, const FieldSpec& f, int range = 2, bool fractions = false) {
    K x = from_int<K>(f, uniform(rng, -range, range));
    if constexpr (scalar_traits<K>::kind == FieldSpec::Kind::rationals)
        if (fractions && uniform(rng, 0, 3) == 0) x /= Rational(uniform(rng, 2, 5));
    return x;
}

/// Reduced word of length exactly `length`.
inline Word word_of_length(Rng& rng, int mu, std::size_t length) {
    std::vector<Letter> letters;
    while (letters.size() < length) {
        Letter l = uniform(rng, 1, mu) * (uniform(rng, 0, 1) ? 1 : -1);
        if (!letters.empty() && letters.back() == -l) continue;
        letters.push_back(l);
    }
    return Word(letters);
}

inline Word word(Rng& rng, int mu, std::size_t max_length) {
    return word_of_length(rng, mu, static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_length))));
}

template <FieldElement K>
GroupRingElem<K> element(Rng& rng, const FieldSpec& f, int mu, std::size_t max_terms, std::size_t max_length,
                         bool fractions = false) {
    GroupRingElem<K> a(f, mu);
    const int terms = uniform(rng, 0, static_cast<int>(max_terms));
    for (int t = 0; t < terms; ++t) a.add_term(word(rng, mu, max_length), scalar<K>(rng, f, 3, fractions));
    return a;
}

template <FieldElement K>
GroupRingMatrix<K> gr_matrix(Rng& rng, const FieldSpec& f, int mu, std::size_t rows, std::size_t cols,
                             std::size_t max_terms, std::size_t max_length, bool fractions = false) {
    GroupRingMatrix<K> m(f, mu, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = element<K>(rng, f, mu, max_terms, max_length, fractions);
    return m;
}

/// Each entry is nonzero with probability `density`.
template <FieldElement K>
Mat<K> matrix(Rng& rng, const FieldSpec& f, std::size_t rows, std::size_t cols, double density = 1.0, int range = 2,
              bool fractions = false) {
    std::bernoulli_distribution keep(density);
    Mat<K> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(rng)) m(i, j) = scalar<K>(rng, f, range, fractions);
    return m;
}

/// Block sizes summing to n with every block allowed to be empty.
inline std::vector<std::size_t> dims(Rng& rng, int mu, std::size_t n) {
    std::vector<std::size_t> d(static_cast<std::size_t>(mu), 0);
    for (std::size_t k = 0; k < n; ++k) ++d[static_cast<std::size_t>(uniform(rng, 0, mu - 1))];
    return d;
}

template <FieldElement K>
SeifertModule<K> seifert(Rng& rng, const FieldSpec& f, int mu, std::size_t n, double density = 0.6,
                         bool fractions = false) {
    return SeifertModule<K>(dims(rng, mu, n), matrix<K>(rng, f, n, n, density, 2, fractions));
}

/// Strongly nilpotent module: a strictly lower triangular e conjugated by a
/// random block-diagonal change of basis.
template <FieldElement K>
SeifertModule<K> strongly_nilpotent_seifert(Rng& rng, const FieldSpec& f, int mu, std::size_t n) {
    auto d = dims(rng, mu, n);
    Mat<K> e = matrix<K>(rng, f, n, n, 0.7);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) e(r, c) = linkring::zero<K>(f);
    Mat<K> g(f, n, n);
    for (;;) {
        g = Mat<K>::identity(f, n);
        std::size_t offset = 0;
        for (std::size_t b = 0; b < d.size(); ++b) {
            for (std::size_t r = 0; r < d[b]; ++r)
                for (std::size_t c = 0; c < d[b]; ++c) g(offset + r, offset + c) = scalar<K>(rng, f, 2);
            offset += d[b];
        }
        if (try_inverse(g)) break;
    }
    return SeifertModule<K>(std::move(d), g * e * inverse(g));
}

}  // namespace linkring::random
