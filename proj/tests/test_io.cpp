#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fuzz.hpp"

using namespace linkring;
using fixtures::F5;
using fixtures::ints;
using fixtures::Q;
using io::json;

TEST(Io, SeifertDocument) {
    auto doc = json::parse(R"({"field": "Q", "mu": 2, "dims": [1, 1], "e": [["1/2", 0], [-1, "3"]]})");
    auto s = io::seifert_from_json<Rational>(doc, io::field_of(doc));
    EXPECT_EQ(s.dims(), (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(to_string(s.e()(0, 0)), "1/2");
    EXPECT_EQ(io::seifert_from_json<Rational>(io::to_json(s), Q), s);
}

TEST(Io, FieldDefaultsToRationals) {
    EXPECT_EQ(io::field_of(json::parse(R"({"dims": [1], "e": [[0]]})")), Q);
    EXPECT_EQ(io::field_of(json::parse(R"j({"field": "GF(5)"})j")), F5);
    EXPECT_THROW(io::field_of(json::parse(R"j({"field": "GF(4)"})j")), error);
}

TEST(Io, GroupRingMatrixDocument) {
    auto doc = json::parse(R"({"field": "Q", "mu": 2, "rows": 1, "cols": 2,
        "entries": [[[{"word": "z1", "coeff": 1}, {"word": "", "coeff": -1}], []]]})");
    auto m = io::gr_matrix_from_json<Rational>(doc, Q);
    EXPECT_EQ(m(0, 0), fixtures::elem(2, {{"z1", 1}, {"", -1}}));
    EXPECT_TRUE(m(0, 1).is_zero());
    EXPECT_EQ(io::gr_matrix_from_json<Rational>(io::to_json(m), Q), m);
}

TEST(Io, MalformedDocumentsAreParseErrors) {
    EXPECT_THROW(io::parse_document("{"), parse_error);
    EXPECT_THROW(io::seifert_from_json<Rational>(json::parse(R"({"dims": [2], "e": [[0]]})"), Q), parse_error);
    EXPECT_THROW(io::seifert_from_json<Rational>(json::parse(R"({"dims": [1], "e": [["x"]]})"), Q), parse_error);
    EXPECT_THROW(io::seifert_from_json<Rational>(json::parse(R"({"dims": [-1], "e": []})"), Q), parse_error);
    EXPECT_THROW(io::seifert_from_json<Rational>(json::parse(R"({"e": [[0]]})"), Q), parse_error);
    EXPECT_THROW(io::gr_matrix_from_json<Rational>(
                     json::parse(R"({"mu": 1, "rows": 1, "cols": 1, "entries": [[[{"word": "z2", "coeff": 1}]]]})"), Q),
                 parse_error);
    EXPECT_THROW(io::tree_from_json(json::parse(R"(["z1", "q"])"), 1), parse_error);
}

TEST(Io, CertificateNullFields) {
    auto s = fixtures::near_projection();
    auto cert = near_projection_certificate(s, SplittingData<Rational>{{1, 1}, {1, 1}, Mat<Rational>::identity(Q, 4)});
    auto j = io::to_json(cert);
    EXPECT_EQ(j["nilpotency_index"], 2);
    cert.split.reset();
    cert.nilpotency.reset();
    j = io::to_json(cert);
    EXPECT_TRUE(j["split"].is_null());
    EXPECT_TRUE(j["nilpotency_index"].is_null());
    auto back = io::certificate_from_json<Rational>(j, Q);
    EXPECT_FALSE(back.split.has_value());
    EXPECT_TRUE(verify_certificate(s, back));
}

TEST(Io, MayerVietorisDocument) {
    auto d = covering_presentation(fixtures::near_projection());
    auto mv = mayer_vietoris(d, CayleySubtree(2));
    auto j = io::to_json(mv);
    EXPECT_EQ(j["t0"]["vertices"], json::parse(R"(["", "z1", "z2"])"));
    EXPECT_EQ(io::mv_from_json<Rational>(j, Q), mv);
    j["t0"]["vertices"] = json::parse(R"(["z1", ""])");
    EXPECT_THROW(io::mv_from_json<Rational>(j, Q), parse_error);
}

TEST(Io, FuzzedRoundTrips) {
    random::Rng rng(81);
    for (int t = 0; t < 300; ++t) {
        EXPECT_EQ(fuzz::serialization_mismatch<Rational>(rng, Q), "");
        EXPECT_EQ(fuzz::serialization_mismatch<Zp>(rng, F5), "");
    }
}
