#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "linkring/random.hpp"

using namespace linkring;
using fixtures::elem;
using fixtures::F5;
using fixtures::ints;
using fixtures::Q;
using fixtures::w;

namespace {

GroupRingMatrix<Rational> one_by_one(int mu, std::initializer_list<std::pair<const char*, long>> terms) {
    GroupRingMatrix<Rational> d(Q, mu, 1, 1);
    d(0, 0) = elem(mu, terms);
    return d;
}

GroupRingMatrix<Rational> standard_row() {
    GroupRingMatrix<Rational> d(Q, 2, 2, 2);
    d(0, 0) = elem(2, {{"z1", 1}, {"", -1}});
    d(0, 1) = elem(2, {{"z2", 1}, {"", -1}});
    return d;
}

}  // namespace

TEST(CheckFlk, Examples) {
    auto cover = covering_presentation(fixtures::near_projection());
    auto flk = check_flk(cover);
    EXPECT_TRUE(flk.augmentation.is_identity());
    EXPECT_TRUE(flk.augmentation_inverse.is_identity());

    EXPECT_THROW(check_flk(standard_row()), not_flk);
    EXPECT_FALSE(is_flk(standard_row()));
    EXPECT_TRUE(is_flk(one_by_one(1, {{"z1", 1}})));
    EXPECT_FALSE(is_flk(one_by_one(1, {{"z1", 1}, {"", -1}})));
    EXPECT_THROW(check_flk(GroupRingMatrix<Rational>(Q, 1, 1, 2)), dimension_mismatch);

    auto two = one_by_one(2, {{"z1", 2}, {"z2", -3}});
    EXPECT_EQ(check_flk(two).augmentation_inverse, ints({{-1}}));
}

TEST(CheckFlk, EveryCoverQualifies) {
    random::Rng rng(61);
    for (int t = 0; t < 100; ++t) {
        auto s = random::seifert<Zp>(rng, F5, random::uniform(rng, 1, 3), static_cast<std::size_t>(random::uniform(rng, 1, 4)));
        EXPECT_TRUE(is_flk(covering_presentation(s)));
    }
}

TEST(TreePair, MinimalPairIsPushforwardOfSupport) {
    auto d = covering_presentation(fixtures::near_projection());
    auto pair = minimal_tree_pair(d);
    EXPECT_EQ(pair.t1.vertices(), (std::set<Word>{w("")}));
    EXPECT_EQ(pair.t0.vertices(), (std::set<Word>{w(""), w("z1"), w("z2")}));
    EXPECT_TRUE(admissible(d, pair));
    EXPECT_FALSE(admissible(d, TreePair{CayleySubtree(2), geodesic_closure(2, {w("z1")})}));
}

TEST(MayerVietoris, Examples) {
    auto id = mayer_vietoris(GroupRingMatrix<Rational>::identity(Q, 1, 2), CayleySubtree(1));
    EXPECT_EQ(id.vertices[0], (std::vector<Word>{w("")}));
    EXPECT_TRUE(id.d_vertex.is_identity());
    EXPECT_EQ(id.d_edge[0].rows(), 0u);

    auto z = mayer_vietoris(one_by_one(1, {{"z1", 1}}), CayleySubtree(1));
    EXPECT_EQ(z.vertices[0], (std::vector<Word>{w(""), w("z1")}));
    EXPECT_EQ(z.d_vertex, ints({{0}, {1}}));
    EXPECT_EQ(z.edges[0][0], (std::vector<Word>{w("")}));
    EXPECT_EQ(z.f_plus[0], (std::vector<std::size_t>{0}));
    EXPECT_EQ(z.f_minus[0], (std::vector<std::size_t>{1}));

    auto np = mayer_vietoris(covering_presentation(fixtures::near_projection()), CayleySubtree(2));
    EXPECT_EQ(np.vertices[0].size(), 3u);
    EXPECT_EQ(np.edges[0][0].size(), 1u);
    EXPECT_EQ(np.edges[0][1].size(), 1u);
    EXPECT_EQ(np.d_vertex.rows(), 12u);
    EXPECT_EQ(np.d_vertex.cols(), 4u);
}

TEST(MayerVietoris, RestrictionMatchesCoefficients) {
    // d = 2 + 3 z1 - z1^-1: column for vertex 1 at T0 vertices z1^-1, 1, z1.
    auto d = one_by_one(1, {{"", 2}, {"z1", 3}, {"z1^-1", -1}});
    auto mv = mayer_vietoris(d, CayleySubtree(1));
    ASSERT_EQ(mv.vertices[0], (std::vector<Word>{w(""), w("z1"), w("z1^-1")}));
    EXPECT_EQ(mv.d_vertex, ints({{2}, {3}, {-1}}));
}

TEST(Transversalize, OneDimensionalExamples) {
    auto id = one_by_one(1, {{"", 1}});
    auto t = transversalize(check_flk(id), make_tree_pair(id, CayleySubtree(1), {w("z1")}));
    EXPECT_EQ(t.module.dims(), (std::vector<std::size_t>{1}));
    EXPECT_EQ(t.module.e(), ints({{0}}));

    auto z = one_by_one(1, {{"z1", 1}});
    auto tz = transversalize(check_flk(z), minimal_tree_pair(z));
    EXPECT_EQ(tz.module.dims(), (std::vector<std::size_t>{1}));
    EXPECT_EQ(tz.module.e(), ints({{1}}));
    EXPECT_EQ(abel_det_class(covering_presentation(tz.module)), abel_det_class(z));
}

TEST(Transversalize, NearProjectionExample) {
    auto s = fixtures::near_projection();
    auto d = covering_presentation(s);
    auto pair = minimal_tree_pair(d);
    auto t = transversalize(check_flk(d), pair);
    EXPECT_EQ(t.module.dims(), (std::vector<std::size_t>{4, 4}));
    EXPECT_EQ(abel_det_class(covering_presentation(t.module)), abel_det_class(d));
    EXPECT_TRUE(refine_check(s, pair));
}

TEST(Transversalize, RoundTripProperties) {
    random::Rng rng(62);
    for (int t = 0; t < 80; ++t) {
        const int mu = random::uniform(rng, 1, 3);
        const auto n = static_cast<std::size_t>(random::uniform(rng, 1, 3));
        auto check = [&]<FieldElement K>(SeifertModule<K> s) {
            auto d = covering_presentation(s);
            std::vector<Word> extra;
            for (int k = random::uniform(rng, 0, 2); k > 0; --k) extra.push_back(random::word(rng, mu, 2));
            auto pair = make_tree_pair(d, geodesic_closure(mu, std::vector<Word>{random::word(rng, mu, 1)}), extra);
            auto tr = transversalize(check_flk(d), pair);
            std::size_t total = 0;
            for (auto k : tr.module.dims()) total += k;
            EXPECT_EQ(total, tr.module.size());
            EXPECT_EQ(abel_det_class(covering_presentation(tr.module)), abel_det_class(d));
            EXPECT_EQ(refine_problem(s, pair), "");
        };
        if (t % 2 == 0) check(random::seifert<Zp>(rng, F5, mu, n, 0.5));
        else check(random::seifert<Rational>(rng, Q, mu, n, 0.5));
    }
}
