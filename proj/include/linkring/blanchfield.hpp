#pragma once

// h.d.-1 F_mu-link module presentations, Mayer-Vietoris linearization over a
// pair of Cayley subtrees, and the transversality construction returning a
// Seifert module with the same covering.
//
// Model: the presented module is coker(D) with D(p·g) = sum_w (d_w p)·(g w);
// F_mu acts by left translation on the vertex label g. A type-i edge at
// source g joins g and z_i·g; f+ sends it to g and f- to z_i·g.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkring/errors.hpp"
#include "linkring/free_group.hpp"
#include "linkring/group_ring.hpp"
#include "linkring/matrix.hpp"
#include "linkring/seifert.hpp"

namespace linkring {

template <FieldElement K>
struct FlkPresentation {
    GroupRingMatrix<K> d;
    Mat<K> augmentation;
    Mat<K> augmentation_inverse;
};

/// Accepts d exactly when augment(d) is invertible; throws not_flk otherwise.
template <FieldElement K>
FlkPresentation<K> check_flk(const GroupRingMatrix<K>& d) {
    if (!d.square()) throw dimension_mismatch("check_flk: matrix is not square");
    Mat<K> aug = augment(d);
    auto inv = try_inverse(aug);
    if (!inv)
        throw not_flk("augmentation has rank " + std::to_string(rank(aug)) + " < " + std::to_string(d.rows()));
    return {d, std::move(aug), std::move(*inv)};
}

template <FieldElement K>
bool is_flk(const GroupRingMatrix<K>& d) {
    return d.square() && try_inverse(augment(d)).has_value();
}

struct TreePair {
    CayleySubtree t0;
    CayleySubtree t1;
};

/// T0 = pushforward(T1, supp d), enlarged by `extra` when given.
template <FieldElement K>
TreePair make_tree_pair(const GroupRingMatrix<K>& d, const CayleySubtree& t1, const std::vector<Word>& extra = {}) {
    if (t1.mu() != d.mu()) throw dimension_mismatch("tree and matrix have different mu");
    if (!t1.valid()) throw invalid_argument("T1 is not a subtree containing 1");
    CayleySubtree t0 = pushforward(t1, d.support());
    for (const Word& w : extra) t0.extend(w);
    return {std::move(t0), t1};
}

template <FieldElement K>
TreePair minimal_tree_pair(const GroupRingMatrix<K>& d) {
    return make_tree_pair(d, CayleySubtree(d.mu()));
}

/// d_*(T1) ⊆ T0 and both are subtrees.
template <FieldElement K>
bool admissible(const GroupRingMatrix<K>& d, const TreePair& t) {
    return t.t0.valid() && t.t1.valid() && t.t0.mu() == d.mu() && t.t1.mu() == d.mu() &&
           pushforward(t.t1, d.support()).subset_of(t.t0);
}

/// Coefficient-level restriction of d to a pair of trees. Index k*n + c is
/// coordinate c of the copy of P at the k-th vertex (or edge source).
template <FieldElement K>
struct MVPresentation {
    TreePair trees;
    std::size_t n = 0;
    std::vector<Word> vertices[2];
    std::vector<std::vector<Word>> edges[2];   ///< per type, edge sources
    Mat<K> d_vertex;                           ///< P[T1 vertices] -> P[T0 vertices]
    std::vector<Mat<K>> d_edge;                ///< per type, P[T1 edges] -> P[T0 edges]
    std::vector<std::vector<std::size_t>> f_plus;   ///< per type, T0 edge -> source vertex
    std::vector<std::vector<std::size_t>> f_minus;  ///< per type, T0 edge -> target vertex
};

namespace detail {

inline std::size_t position(const std::vector<Word>& sorted, const Word& w) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
    if (it == sorted.end() || !(*it == w)) throw internal_error("TreeIndex", "'" + w.str() + "' missing from tree");
    return static_cast<std::size_t>(it - sorted.begin());
}

template <FieldElement K>
Mat<K> restrict_to(const GroupRingMatrix<K>& d, const std::vector<Word>& from, const std::vector<Word>& to) {
    const std::size_t n = d.rows();
    Mat<K> m(d.field(), to.size() * n, from.size() * n);
    for (const Word& w : d.support()) {
        const Mat<K> dw = d.coefficient(w);
        for (std::size_t k = 0; k < from.size(); ++k) {
            const std::size_t target = position(to, from[k] * w);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) m(target * n + r, k * n + c) += dw(r, c);
        }
    }
    return m;
}

}  // namespace detail

template <FieldElement K>
MVPresentation<K> mayer_vietoris(const GroupRingMatrix<K>& d, const TreePair& trees) {
    if (!d.square()) throw dimension_mismatch("mayer_vietoris: matrix is not square");
    if (!admissible(d, trees)) throw invalid_argument("tree pair violates d_*(T1) ⊆ T0");
    MVPresentation<K> mv;
    mv.trees = trees;
    mv.n = d.rows();
    const CayleySubtree* t[2] = {&trees.t0, &trees.t1};
    for (int j = 0; j < 2; ++j) {
        mv.vertices[j].assign(t[j]->vertices().begin(), t[j]->vertices().end());
        for (int i = 1; i <= d.mu(); ++i) mv.edges[j].push_back(t[j]->edges(i));
    }
    mv.d_vertex = detail::restrict_to(d, mv.vertices[1], mv.vertices[0]);
    for (int i = 1; i <= d.mu(); ++i) {
        const auto& e0 = mv.edges[0][static_cast<std::size_t>(i - 1)];
        mv.d_edge.push_back(detail::restrict_to(d, mv.edges[1][static_cast<std::size_t>(i - 1)], e0));
        std::vector<std::size_t> plus, minus;
        for (const Word& g : e0) {
            plus.push_back(detail::position(mv.vertices[0], g));
            minus.push_back(detail::position(mv.vertices[0], Word::generator(i) * g));
        }
        mv.f_plus.push_back(std::move(plus));
        mv.f_minus.push_back(std::move(minus));
    }
    return mv;
}

template <FieldElement K>
MVPresentation<K> mayer_vietoris(const GroupRingMatrix<K>& d, const CayleySubtree& t1) {
    return mayer_vietoris(d, make_tree_pair(d, t1));
}

template <FieldElement K>
bool operator==(const MVPresentation<K>& a, const MVPresentation<K>& b) {
    return a.n == b.n && a.trees.t0 == b.trees.t0 && a.trees.t1 == b.trees.t1 && a.vertices[0] == b.vertices[0] &&
           a.vertices[1] == b.vertices[1] && a.edges[0] == b.edges[0] && a.edges[1] == b.edges[1] &&
           a.d_vertex == b.d_vertex && a.d_edge == b.d_edge && a.f_plus == b.f_plus && a.f_minus == b.f_minus;
}

template <FieldElement K>
struct Transversal {
    SeifertModule<K> module;   ///< (P<T>, e<T>)
    Mat<K> refine;             ///< P -> P<T>, induced by P = P[{1}] ⊆ P[T0]
    MVPresentation<K> mv;
};

/// P_i<T> = coker(d_C^(i)), Q<T> = coker(d_D), e<T> = (f+ - f-)^{-1} f+.
template <FieldElement K>
Transversal<K> transversalize(const FlkPresentation<K>& flk, const TreePair& trees) {
    const auto& d = flk.d;
    MVPresentation<K> mv = mayer_vietoris(d, trees);
    const FieldSpec f = d.field();
    const std::size_t n = mv.n;
    const std::size_t mu = static_cast<std::size_t>(d.mu());

    if (rank(mv.d_vertex) != mv.d_vertex.cols())
        throw internal_error("RestrictionNotInjective", "d restricted to the vertices of T1 is not injective");
    const Cokernel<K> q = cokernel_with_section(mv.d_vertex);

    std::vector<std::size_t> dims;
    Mat<K> f_plus(f, q.proj.rows(), 0), f_minus(f, q.proj.rows(), 0);
    for (std::size_t i = 0; i < mu; ++i) {
        if (rank(mv.d_edge[i]) != mv.d_edge[i].cols())
            throw internal_error("RestrictionNotInjective",
                                 "d restricted to the type-" + std::to_string(i + 1) + " edges of T1 is not injective");
        const Cokernel<K> p = cokernel_with_section(mv.d_edge[i]);
        dims.push_back(p.basis.size());
        Mat<K> plus(f, q.proj.rows(), p.basis.size()), minus(f, q.proj.rows(), p.basis.size());
        for (std::size_t k = 0; k < p.basis.size(); ++k) {
            const std::size_t edge = p.basis[k] / n, c = p.basis[k] % n;
            const std::size_t src = mv.f_plus[i][edge] * n + c, dst = mv.f_minus[i][edge] * n + c;
            for (std::size_t r = 0; r < q.proj.rows(); ++r) {
                plus(r, k) = q.proj(r, src);
                minus(r, k) = q.proj(r, dst);
            }
        }
        f_plus = hconcat(f_plus, plus);
        f_minus = hconcat(f_minus, minus);
    }
    if (f_plus.cols() != f_plus.rows())
        throw internal_error("GlueSingular", "dim Q<T> = " + std::to_string(f_plus.rows()) +
                                                 " differs from sum dim P_i<T> = " + std::to_string(f_plus.cols()));
    auto glue = try_inverse(f_plus - f_minus);
    if (!glue) throw internal_error("GlueSingular", "f+ - f- is not invertible");

    std::vector<std::size_t> rows(q.proj.rows()), at_one(n);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    const std::size_t one = detail::position(mv.vertices[0], Word()) * n;
    std::iota(at_one.begin(), at_one.end(), one);
    Mat<K> refine = *glue * q.proj.submatrix(rows, at_one);
    return {SeifertModule<K>(std::move(dims), *glue * f_plus), std::move(refine), std::move(mv)};
}

/// Empty when the refinement map of transversalize(cover(S), trees) is a
/// Seifert morphism S -> S<T>; otherwise the first violated identity.
template <FieldElement K>
std::string refine_problem(const SeifertModule<K>& s, const TreePair& trees) {
    const auto t = transversalize(check_flk(covering_presentation(s)), trees);
    return morphism_problem(SeifertMorphism<K>{s, t.module, t.refine});
}

template <FieldElement K>
bool refine_check(const SeifertModule<K>& s, const TreePair& trees) {
    return refine_problem(s, trees).empty();
}

}  // namespace linkring
