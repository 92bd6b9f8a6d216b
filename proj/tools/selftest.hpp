#pragma once

// Randomized battery behind `linkring selftest`.

#include <cstdint>
#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "linkring/io.hpp"
#include "linkring/linkring.hpp"
#include "linkring/random.hpp"

namespace linkring::selftest {

struct Tally {
    nlohmann::json report = nlohmann::json::object();
    bool ok = true;

    void run(const std::string& name, int trials, const std::function<bool()>& check) {
        int passed = 0;
        std::string first_error;
        for (int t = 0; t < trials; ++t) {
            try {
                if (check()) ++passed;
            } catch (const std::exception& e) {
                if (first_error.empty()) first_error = e.what();
            }
        }
        report[name] = {{"passed", passed}, {"trials", trials}};
        if (!first_error.empty()) report[name]["first_error"] = first_error;
        ok = ok && passed == trials;
    }
};

template <FieldElement K>
void battery(Tally& tally, random::Rng& rng, const FieldSpec& f, std::size_t degree, std::size_t bound) {
    const std::string tag = " " + f.name();
    const bool q = f.kind == FieldSpec::Kind::rationals;

    tally.run("group ring associativity" + tag, 40, [&] {
        const int mu = random::uniform(rng, 1, 3);
        auto a = random::element<K>(rng, f, mu, 4, 3, q), b = random::element<K>(rng, f, mu, 4, 3, q),
             c = random::element<K>(rng, f, mu, 4, 3, q);
        return (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
    });
    tally.run("augmentation is multiplicative" + tag, 40, [&] {
        const int mu = random::uniform(rng, 1, 3);
        auto a = random::gr_matrix<K>(rng, f, mu, 2, 3, 3, 3, q), b = random::gr_matrix<K>(rng, f, mu, 3, 2, 3, 3, q);
        return augment(a * b) == augment(a) * augment(b);
    });
    tally.run("embedding is multiplicative" + tag, 40, [&] {
        const int mu = random::uniform(rng, 1, 3);
        auto a = random::element<K>(rng, f, mu, 3, 3, q), b = random::element<K>(rng, f, mu, 3, 3, q);
        return embed(a * b, degree) == embed(a, degree) * embed(b, degree);
    });
    tally.run("series inverse" + tag, 20, [&] {
        const int mu = random::uniform(rng, 1, 2);
        auto s = random::seifert<K>(rng, f, mu, static_cast<std::size_t>(random::uniform(rng, 1, 3)));
        auto m = embed(covering_presentation(s), degree);
        auto inv = series_mat_inverse(m);
        return inv && (*inv * m).is_identity() && (m * *inv).is_identity();
    });
    tally.run("primitivity certificates verify" + tag, 30, [&] {
        const int mu = random::uniform(rng, 1, 2);
        const auto n = static_cast<std::size_t>(random::uniform(rng, 1, 4));
        auto s = random::uniform(rng, 0, 1) ? random::strongly_nilpotent_seifert<K>(rng, f, mu, n)
                                            : random::seifert<K>(rng, f, mu, n, 0.4);
        auto r = primitivity_decide(s, bound);
        if (!r.primitive) return true;
        return verify_certificate(s, *r.certificate) && abel_det_class(covering_presentation(s)).is_unit_monomial();
    });
    tally.run("transversality round trip" + tag, 40, [&] {
        const int mu = random::uniform(rng, 1, 3);
        auto s = random::seifert<K>(rng, f, mu, static_cast<std::size_t>(random::uniform(rng, 1, 4)));
        const auto d = covering_presentation(s);
        const auto pair = minimal_tree_pair(d);
        const auto t = transversalize(check_flk(d), pair);
        return refine_check(s, pair) && abel_det_class(covering_presentation(t.module)) == abel_det_class(d);
    });
    tally.run("serialization round trip" + tag, 40, [&] {
        const int mu = random::uniform(rng, 1, 3);
        auto m = random::gr_matrix<K>(rng, f, mu, 2, 2, 3, 3, q);
        auto s = random::seifert<K>(rng, f, mu, 3, 0.6, q);
        return io::gr_matrix_from_json<K>(io::to_json(m), f) == m && io::seifert_from_json<K>(io::to_json(s), f) == s;
    });
}

inline nlohmann::json run(std::uint64_t seed, std::size_t degree, std::size_t bound) {
    random::Rng rng(seed);
    Tally tally;
    battery<Rational>(tally, rng, FieldSpec::rationals(), degree, bound);
    battery<Zp>(tally, rng, FieldSpec::prime(5), degree, bound);
    return {{"seed", seed}, {"degree", degree}, {"support_bound", bound}, {"ok", tally.ok}, {"checks", tally.report}};
}

}  // namespace linkring::selftest
