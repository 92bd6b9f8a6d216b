#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "linkring/random.hpp"
#include "oracles.hpp"

using namespace linkring;
using fixtures::elem;
using fixtures::F5;
using fixtures::Q;
using fixtures::w;

TEST(GroupRing, ProductExamples) {
    EXPECT_EQ(elem(1, {{"z1", 1}}) * elem(1, {{"z1^-1", 1}}), elem(1, {{"", 1}}));
    EXPECT_EQ(elem(1, {{"", 1}, {"z1", 1}}) * elem(1, {{"", 1}, {"z1", -1}}), elem(1, {{"", 1}, {"z1 z1", -1}}));
    EXPECT_EQ(elem(2, {{"z1", 1}, {"", -1}}) * elem(2, {{"z2", 1}, {"", -1}}),
              elem(2, {{"z1 z2", 1}, {"z1", -1}, {"z2", -1}, {"", 1}}));
}

TEST(GroupRing, NoZeroCoefficientsStored) {
    auto a = elem(2, {{"z1", 1}, {"z1", -1}});
    EXPECT_TRUE(a.is_zero());
    EXPECT_TRUE(a.terms().empty());
}

TEST(GroupRing, ProductMatchesRepresentationOracle) {
    random::Rng rng(31);
    for (int t = 0; t < 300; ++t) {
        auto a = random::element<Rational>(rng, Q, 2, 4, 3, true), b = random::element<Rational>(rng, Q, 2, 4, 3, true);
        EXPECT_EQ(oracle::represent(a * b), oracle::represent_product(a, b));
    }
}

TEST(GroupRing, RingAxioms) {
    random::Rng rng(32);
    for (int t = 0; t < 300; ++t) {
        const int mu = random::uniform(rng, 1, 3);
        auto a = random::element<Zp>(rng, F5, mu, 4, 3), b = random::element<Zp>(rng, F5, mu, 4, 3),
             c = random::element<Zp>(rng, F5, mu, 4, 3);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) * c, a * c + b * c);
    }
}

TEST(Augment, Examples) {
    GroupRingMatrix<Rational> m(Q, 1, 1, 1);
    m(0, 0) = elem(1, {{"z1", 1}, {"", -1}});
    EXPECT_TRUE(augment(m).is_zero());

    GroupRingMatrix<Rational> c(Q, 2, 1, 1);
    c(0, 0) = elem(2, {{"z1 z2^-1", 2}});
    EXPECT_EQ(augment(c), fixtures::ints({{2}}));

    EXPECT_TRUE(augment(covering_presentation(fixtures::near_projection())).is_identity());
}

TEST(Augment, IsMultiplicative) {
    random::Rng rng(33);
    for (int t = 0; t < 200; ++t) {
        const int mu = random::uniform(rng, 1, 3);
        auto a = random::gr_matrix<Rational>(rng, Q, mu, 2, 3, 3, 3, true);
        auto b = random::gr_matrix<Rational>(rng, Q, mu, 3, 2, 3, 3, true);
        EXPECT_EQ(augment(a * b), augment(a) * augment(b));
    }
}

TEST(Abelianize, Examples) {
    GroupRingMatrix<Rational> m(Q, 2, 1, 2);
    m(0, 0) = elem(2, {{"z1 z2 z1^-1", 1}});
    m(0, 1) = elem(2, {{"z1 z2", 1}, {"z2 z1", -1}});
    auto a = abelianize(m);
    EXPECT_EQ(a(0, 0), LaurentPoly<Rational>::variable(Q, 2, 2));
    EXPECT_TRUE(a(0, 1).is_zero());

    auto cover = abelianize(covering_presentation(fixtures::trefoil()));
    EXPECT_EQ(cover(0, 0).str(), "1");
    EXPECT_EQ(cover(0, 1).str(), "-z + 1");
    EXPECT_EQ(cover(1, 0).str(), "z - 1");
    EXPECT_EQ(cover(1, 1).str(), "z");
}

TEST(Abelianize, RingMorphismCompatibleWithAugmentation) {
    random::Rng rng(34);
    for (int t = 0; t < 200; ++t) {
        const int mu = random::uniform(rng, 1, 3);
        auto a = random::element<Zp>(rng, F5, mu, 4, 3), b = random::element<Zp>(rng, F5, mu, 4, 3);
        EXPECT_EQ((a * b).abelianize(), a.abelianize() * b.abelianize());
        EXPECT_EQ(a.abelianize().eval_at_ones(), a.augment());
    }
}

TEST(GroupRingMatrix, Products) {
    auto d = covering_presentation(fixtures::near_projection());
    EXPECT_EQ(d * GroupRingMatrix<Rational>::identity(Q, 2, 4), d);
    GroupRingMatrix<Rational> a(Q, 1, 1, 1), b(Q, 1, 1, 1);
    a(0, 0) = elem(1, {{"z1", 1}});
    b(0, 0) = elem(1, {{"z1^-1", 1}});
    EXPECT_TRUE((a * b).is_identity());
    EXPECT_THROW(GroupRingMatrix<Rational>(Q, 1, 2, 3) * GroupRingMatrix<Rational>(Q, 1, 2, 3), dimension_mismatch);
}
