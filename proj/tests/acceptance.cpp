// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "fuzz.hpp"
#include "linkring/io.hpp"
#include "oracles.hpp"

using namespace linkring;
using fixtures::F5;
using fixtures::Q;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Unit-monomial ratio of two raw determinants.
template <FieldElement K>
bool same_class(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    auto q = divide_exact(a, b);
    return q && q->terms().size() == 1;
}

Outcome near_projection_example() {
    Outcome out;
    auto doc = io::parse_document(read_file(std::string(LINKRING_SAMPLES) + "/near_projection.json"));
    auto s = io::seifert_from_json<Rational>(doc, io::field_of(doc));
    auto d = covering_presentation(s);

    // 1 - e + ez as displayed, and its inverse from the factorization
    // (1 + N)·diag(1, z1, 1, z2) with N^2 = 0.
    GroupRingMatrix<Rational> displayed(Q, 2, 4, 4), n(Q, 2, 4, 4), diag_inv(Q, 2, 4, 4);
    displayed(0, 0) = fixtures::elem(2, {{"", 1}});
    displayed(1, 1) = fixtures::elem(2, {{"z1", 1}});
    displayed(1, 2) = fixtures::elem(2, {{"z2", 1}, {"", -1}});
    displayed(2, 2) = fixtures::elem(2, {{"", 1}});
    displayed(3, 0) = fixtures::elem(2, {{"z1", 1}, {"", -1}});
    displayed(3, 3) = fixtures::elem(2, {{"z2", 1}});
    n(1, 2) = displayed(1, 2);
    n(3, 0) = displayed(3, 0);
    diag_inv(0, 0) = fixtures::elem(2, {{"", 1}});
    diag_inv(1, 1) = fixtures::elem(2, {{"z1^-1", 1}});
    diag_inv(2, 2) = fixtures::elem(2, {{"", 1}});
    diag_inv(3, 3) = fixtures::elem(2, {{"z2^-1", 1}});
    const auto id = GroupRingMatrix<Rational>::identity(Q, 2, 4);
    const auto expected_inverse = diag_inv * (id - n);

    if (!(d == displayed)) out.fail("cover differs from the displayed 1-e+ez");
    auto r = primitivity_decide(s, 2);
    if (!r.primitive) return out.fail("primitive --bound 2 did not return Primitive"), out;
    const auto& x = r.certificate->inverse;
    if (!(x * displayed == id) || !(displayed * x == id)) out.fail("certificate product identities fail");
    if (!(x == expected_inverse)) out.fail("certificate inverse differs from the factorized inverse");
    if (!verify_certificate(s, *r.certificate)) out.fail("verify_certificate rejected the certificate");
    if (strong_nilpotence(fixtures::near_projection_twisted()) != std::optional<std::size_t>(2))
        out.fail("strong_nilpotence rejected the displayed e'");
    SplittingData<Rational> split{{1, 1}, {1, 1}, Mat<Rational>::identity(Q, 4)};
    if (!(twisted_module(s, split) == fixtures::near_projection_twisted())) out.fail("twisted module differs from e'");
    if (!r.certificate->split) out.fail("no splitting recovered");
    else if (!(twisted_module(s, *r.certificate->split) == fixtures::near_projection_twisted()))
        out.fail("recovered splitting does not give the displayed e'");
    out.detail = out.ok ? "method=" + r.method : out.detail;
    return out;
}

template <FieldElement K>
void round_trip(random::Rng& rng, const FieldSpec& f, Outcome& out, int& internal) {
    const int mu = random::uniform(rng, 1, 3);
    const auto n = static_cast<std::size_t>(random::uniform(rng, 1, 6));
    auto s = random::seifert<K>(rng, f, mu, n, 0.5, f == Q);
    try {
        auto d = covering_presentation(s);
        auto pair = minimal_tree_pair(d);
        auto t = transversalize(check_flk(d), pair);
        if (auto p = morphism_problem(SeifertMorphism<K>{s, t.module, t.refine}); !p.empty()) out.fail("refine_check: " + p);
        auto before = determinant(abelianize(d)), after = determinant(abelianize(covering_presentation(t.module)));
        if (!same_class(before, after)) out.fail("determinant class changed: " + before.str() + " vs " + after.str());
        if (!(abel_det_class(d) == abel_det_class(covering_presentation(t.module)))) out.fail("normalized class changed");
    } catch (const internal_error& e) {
        ++internal;
        out.fail(std::string("internal error ") + e.what());
    }
}

Outcome transversality_round_trips() {
    Outcome out;
    random::Rng rng(2024);
    int internal = 0;
    const int trials = 500;
    for (int t = 0; t < trials; ++t) {
        if (t % 2 == 0) round_trip<Zp>(rng, F5, out, internal);
        else round_trip<Rational>(rng, Q, out, internal);
    }
    if (out.ok) out.detail = std::to_string(trials) + " modules, internal errors " + std::to_string(internal);
    return out;
}

Outcome bhs_completeness() {
    Outcome out;
    random::Rng rng(2025);
    int primitive = 0;
    const int trials = 500;
    for (int t = 0; t < trials; ++t) {
        auto s = random::seifert<Zp>(rng, F5, 1, 3, random::uniform(rng, 2, 8) / 10.0);
        const bool expected = nilpotency_index(s.e() * (Mat<Zp>::identity(F5, 3) - s.e())).has_value();
        auto r = primitivity_decide(s, 3);
        if (r.primitive != expected) {
            out.fail("decision disagrees with nilpotence of e(1-e)");
            continue;
        }
        if (!r.primitive) continue;
        ++primitive;
        if (!verify_certificate(s, *r.certificate)) out.fail("certificate failed verification");
        if (!r.certificate->split) {
            out.fail("primitive answer without a splitting");
            continue;
        }
        const auto& sp = *r.certificate->split;
        const Mat<Zp> adapted = inverse(sp.basis) * s.e() * sp.basis;
        const std::size_t np = sp.plus[0];
        std::vector<std::size_t> plus(np), minus(3 - np);
        std::iota(plus.begin(), plus.end(), std::size_t{0});
        std::iota(minus.begin(), minus.end(), np);
        if (!nilpotency_index(adapted.submatrix(plus, plus))) out.fail("e+ not nilpotent");
        if (!nilpotency_index(Mat<Zp>::identity(F5, minus.size()) - adapted.submatrix(minus, minus)))
            out.fail("1 - e- not nilpotent");
    }
    if (out.ok) out.detail = std::to_string(trials) + " cases, " + std::to_string(primitive) + " primitive";
    return out;
}

Outcome strong_nilpotence_oracle() {
    Outcome out;
    random::Rng rng(2026);
    const int trials = 1200;
    int nilpotent = 0;
    for (int t = 0; t < trials; ++t) {
        const int mu = random::uniform(rng, 1, 2);
        const auto n = static_cast<std::size_t>(random::uniform(rng, 0, 4));
        auto s = t % 3 == 0 ? random::seifert<Zp>(rng, F5, mu, n, 0.3)
                 : t % 3 == 1 ? random::strongly_nilpotent_seifert<Zp>(rng, F5, mu, n)
                              : random::seifert<Zp>(rng, F5, mu, n, 0.15);
        auto got = strong_nilpotence(s);
        nilpotent += got.has_value();
        if (got != oracle::strong_nilpotence_paths(s)) out.fail("flag and path enumeration disagree");
    }
    if (out.ok) out.detail = std::to_string(trials) + " instances, " + std::to_string(nilpotent) + " strongly nilpotent";
    return out;
}

Outcome magnus_fox() {
    Outcome out;
    const std::size_t degree = 5;
    random::Rng rng(2027);
    for (int t = 0; t < 250; ++t) {
        const int mu = random::uniform(rng, 1, 3);
        auto a = random::element<Rational>(rng, Q, mu, 4, 4, true), b = random::element<Rational>(rng, Q, mu, 4, 4, true);
        if (!(embed(a * b, degree) == embed(a, degree) * embed(b, degree))) out.fail("embed(ab) != embed(a)embed(b)");
    }
    for (int mu = 1; mu <= 3; ++mu)
        for (int j = 1; j <= mu; ++j) {
            auto zj = embed(GroupRingElem<Rational>::word(Q, mu, Word::generator(j)), degree);
            auto zinv = embed(GroupRingElem<Rational>::word(Q, mu, Word::generator(j, -1)), degree);
            if (!(zj * zinv == TruncSeries<Rational>::constant(Q, mu, degree, Rational(1))))
                out.fail("embed(z_j)embed(z_j^-1) != 1");
        }
    int inverted = 0;
    while (inverted < 120) {
        const int mu = random::uniform(rng, 1, 2);
        const auto n = static_cast<std::size_t>(random::uniform(rng, 1, 3));
        auto m = embed(random::gr_matrix<Zp>(rng, F5, mu, n, n, 3, 2), degree);
        Mat<Zp> constant(F5, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) constant(r, c) = m(r, c).constant_term();
        if (!try_inverse(constant)) continue;
        ++inverted;
        auto inv = series_mat_inverse(m);
        if (!inv || !(*inv * m).is_identity() || !(m * *inv).is_identity()) out.fail("series inverse product identity");
    }
    if (out.ok) out.detail = "250 pairs, " + std::to_string(inverted) + " series inverses";
    return out;
}

Outcome bounded_support() {
    Outcome out;
    random::Rng rng(2028);
    int found = 0;
    for (int t = 0; t < 150; ++t) {
        const int mu = random::uniform(rng, 1, 2);
        const auto n = static_cast<std::size_t>(random::uniform(rng, 1, 3));
        auto s = t % 2 == 0 ? random::strongly_nilpotent_seifert<Zp>(rng, F5, mu, n) : random::seifert<Zp>(rng, F5, mu, n, 0.4);
        auto d = covering_presentation(s);
        auto r = bounded_support_inverse(d, 2);
        if (!r.inverse) continue;
        ++found;
        const auto id = GroupRingMatrix<Zp>::identity(F5, mu, n);
        if (!(*r.inverse * d == id) || !(d * *r.inverse == id)) out.fail("returned inverse does not verify");
    }
    auto trefoil = fixtures::trefoil();
    if (bounded_support_inverse(covering_presentation(trefoil), 3).inverse) out.fail("trefoil inverse found within 3");
    if (primitivity_decide(trefoil, 3).primitive) out.fail("trefoil reported primitive");
    if (alexander(trefoil).str() != "z^2 - z + 1") out.fail("trefoil alexander " + alexander(trefoil).str());
    // Hand expansion: det [[1, 1 - z], [z - 1, z]] = z + (z - 1)^2 = z^2 - z + 1.
    auto by_hand = oracle::laplace_det(abelianize(covering_presentation(trefoil)));
    if (!(by_hand.normalized() == alexander(trefoil))) out.fail("alexander disagrees with cofactor expansion");
    if (out.ok) out.detail = std::to_string(found) + " inverses verified, trefoil NoInverseUpTo(3)";
    return out;
}

Outcome flk_corpus() {
    Outcome out;
    random::Rng rng(2029);
    int accepted = 0, rejected = 0;
    for (int t = 0; t < 300; ++t) {
        const int mu = random::uniform(rng, 1, 3);
        if (t % 3 == 0) {
            auto d = covering_presentation(random::seifert<Rational>(rng, Q, mu, static_cast<std::size_t>(random::uniform(rng, 1, 4))));
            if (!augment(d).is_identity()) out.fail("cover augmentation is not the identity");
            if (!is_flk(d)) out.fail("cover rejected");
            ++accepted;
        } else if (t % 3 == 1) {
            GroupRingMatrix<Rational> row(Q, mu, static_cast<std::size_t>(mu), static_cast<std::size_t>(mu));
            for (int i = 1; i <= mu; ++i) {
                auto zi = GroupRingElem<Rational>::word(Q, mu, Word::generator(i));
                row(0, static_cast<std::size_t>(i - 1)) = zi - GroupRingElem<Rational>::constant(Q, mu, Rational(1));
            }
            try {
                check_flk(row);
                out.fail("padded standard row accepted");
            } catch (const not_flk&) {
                ++rejected;
            }
        } else {
            const auto n = static_cast<std::size_t>(random::uniform(rng, 1, 3));
            auto d = random::gr_matrix<Zp>(rng, F5, mu, n, n, 2, 2);
            const bool expected = !is_zero(oracle::laplace_det(augment(d)));
            if (is_flk(d) != expected) out.fail("check_flk disagrees with the augmentation determinant");
            expected ? ++accepted : ++rejected;
        }
    }
    if (out.ok) out.detail = std::to_string(accepted) + " accepted, " + std::to_string(rejected) + " rejected";
    return out;
}

Outcome serialization() {
    Outcome out;
    random::Rng rng(2030);
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        auto kind = t % 2 == 0 ? fuzz::serialization_mismatch<Rational>(rng, Q) : fuzz::serialization_mismatch<Zp>(rng, F5);
        if (!kind.empty()) out.fail(kind + " round trip mismatch");
    }
    if (out.ok) out.detail = std::to_string(trials) + " documents";
    return out;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"near-projection example end to end", near_projection_example},
        {"round-trip transversality", transversality_round_trips},
        {"BHS completeness at mu=1", bhs_completeness},
        {"strong nilpotence oracle equivalence", strong_nilpotence_oracle},
        {"Magnus-Fox ring morphism at D=5", magnus_fox},
        {"bounded-support soundness and trefoil witness", bounded_support},
        {"Blanchfield criterion corpus", flk_corpus},
        {"serialization fidelity", serialization},
    };
    int failures = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out.fail(std::string("uncaught: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= 60.0) out.fail("exceeded 60 s");
        failures += !out.ok;
        std::printf("%s %d %s (%.2fs) %s\n", out.ok ? "PASS" : "FAIL", index, name, secs, out.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
