#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "linkring/random.hpp"
#include "oracles.hpp"

using namespace linkring;
using fixtures::w;

TEST(Word, Multiplication) {
    EXPECT_TRUE((w("z1") * w("z1^-1")).is_identity());
    EXPECT_EQ(w("z1") * w("z2"), w("z1 z2"));
    EXPECT_EQ(w("z1 z2^-1") * w("z2 z1"), w("z1 z1"));
}

TEST(Word, ParsePrintRoundTrip) {
    for (const char* text : {"", "z1", "z1^-1", "z2 z1^-1 z3", "z12 z12"}) EXPECT_EQ(w(text).str(), text);
    EXPECT_EQ(w("z1 z1^-1 z2").str(), "z2");
    EXPECT_THROW(w("y1"), parse_error);
    EXPECT_THROW(w("z0"), parse_error);
    EXPECT_THROW(w("z1^2"), parse_error);
}

TEST(Word, CanonicalOrder) {
    std::vector<Word> ws{w("z2"), w("z1^-1"), w(""), w("z1 z1"), w("z1")};
    std::sort(ws.begin(), ws.end());
    std::vector<std::string> got;
    for (const auto& x : ws) got.push_back(x.str());
    EXPECT_EQ(got, (std::vector<std::string>{"", "z1", "z1^-1", "z2", "z1 z1"}));
}

TEST(Word, GroupLawsAgainstIntegerRepresentation) {
    random::Rng rng(21);
    for (int t = 0; t < 500; ++t) {
        auto a = random::word(rng, 2, 8), b = random::word(rng, 2, 8), c = random::word(rng, 2, 8);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_TRUE((a * a.inverse()).is_identity());
        EXPECT_TRUE((a.inverse() * a).is_identity());
        EXPECT_EQ(a * Word(), a);
        std::vector<int> raw = a.letters();
        raw.insert(raw.end(), b.letters().begin(), b.letters().end());
        EXPECT_EQ(oracle::image((a * b).letters()), oracle::image(raw));
        EXPECT_EQ(a == b, oracle::image(a.letters()) == oracle::image(b.letters()));
    }
}

TEST(WordsUpTo, CountsReducedWords) {
    // 1 + 2mu * sum_{k<L} (2mu-1)^k
    EXPECT_EQ(words_up_to(2, 3).size(), 1u + 4 + 12 + 36);
    EXPECT_EQ(words_up_to(1, 4).size(), 9u);
    auto ws = words_up_to(3, 2);
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
}

TEST(GeodesicClosure, Examples) {
    auto empty = geodesic_closure(2, std::vector<Word>{});
    EXPECT_EQ(empty.vertex_count(), 1u);
    EXPECT_EQ(empty.edge_count(), 0u);

    auto t = geodesic_closure(2, {w("z1 z2")});
    EXPECT_EQ(t.vertices(), (std::set<Word>{w(""), w("z2"), w("z1 z2")}));
    EXPECT_EQ(t.edges(2), (std::vector<Word>{w("")}));
    EXPECT_EQ(t.edges(1), (std::vector<Word>{w("z2")}));

    auto inv = geodesic_closure(1, {w("z1^-1")});
    EXPECT_EQ(inv.edges(1), (std::vector<Word>{w("z1^-1")}));
}

TEST(Pushforward, Examples) {
    auto star = pushforward(CayleySubtree(2), {w(""), w("z1"), w("z2")});
    EXPECT_EQ(star.vertices(), (std::set<Word>{w(""), w("z1"), w("z2")}));
    EXPECT_EQ(star.edges(1), (std::vector<Word>{w("")}));
    EXPECT_EQ(star.edges(2), (std::vector<Word>{w("")}));

    auto t = geodesic_closure(1, {w("z1")});
    EXPECT_EQ(pushforward(t, {w("")}), t);
    EXPECT_EQ(pushforward(t, {w("z1")}).vertices(), (std::set<Word>{w(""), w("z1"), w("z1 z1")}));
}

TEST(CayleySubtree, Properties) {
    random::Rng rng(22);
    for (int t = 0; t < 300; ++t) {
        const int mu = random::uniform(rng, 1, 3);
        std::vector<Word> a, b;
        for (int k = random::uniform(rng, 0, 4); k > 0; --k) a.push_back(random::word(rng, mu, 4));
        for (int k = random::uniform(rng, 0, 4); k > 0; --k) b.push_back(random::word(rng, mu, 4));
        auto ta = geodesic_closure(mu, a);
        EXPECT_TRUE(ta.valid());
        EXPECT_EQ(ta.edge_count() + 1, ta.vertex_count());
        EXPECT_EQ(geodesic_closure(mu, ta.vertices()), ta);
        auto ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        EXPECT_TRUE(ta.subset_of(geodesic_closure(mu, ab)));

        auto p = pushforward(ta, b);
        EXPECT_TRUE(p.valid());
        EXPECT_TRUE(p.subset_of(pushforward(ta, ab)));
        EXPECT_TRUE(ta.subset_of(p));
    }
}
