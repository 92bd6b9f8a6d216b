// linkring: command-line front end. Every subcommand reads JSON documents and
// writes one JSON document to stdout. Exit status 0 on success, 1 on domain
// errors, 2 on malformed input.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "linkring/io.hpp"
#include "linkring/linkring.hpp"
#include "selftest.hpp"

namespace {

using namespace linkring;
using nlohmann::json;

/// Domain failure reported as {"error": code, "detail": ...} with exit status 1.
struct domain_failure {
    std::string code;
    json detail;
};

json read_document(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open '" + path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return io::parse_document(text);
}

bool is_seifert(const json& doc) { return doc.is_object() && doc.contains("e"); }

/// Group ring matrix document, or the covering presentation of a Seifert document.
template <FieldElement K>
GroupRingMatrix<K> matrix_input(const json& doc, const FieldSpec& f) {
    if (is_seifert(doc)) return covering_presentation(io::seifert_from_json<K>(doc, f));
    return io::gr_matrix_from_json<K>(doc, f);
}

std::vector<Word> word_list(const std::string& text) {
    std::vector<Word> words;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) words.push_back(Word::parse(item));
    return words;
}

template <FieldElement K>
TreePair tree_pair_input(const GroupRingMatrix<K>& d, const std::string& tree, const std::string& tree0) {
    for (const auto& w : word_list(tree))
        if (w.max_generator() > d.mu()) throw parse_error("tree vertex '" + w.str() + "' exceeds mu");
    return make_tree_pair(d, geodesic_closure(d.mu(), word_list(tree)), word_list(tree0));
}

struct Options {
    std::string input;
    std::string certificate;
    std::string tree;
    std::string tree0;
    std::size_t degree = 6;
    std::size_t support_bound = 4;
    std::size_t bound = 0;
};

json cmd_cover(const Options& o) {
    const json doc = read_document(o.input);
    const FieldSpec f = io::field_of(doc);
    return with_field(f, [&](auto tag) -> json {
        using K = typename decltype(tag)::type;
        return io::to_json(covering_presentation(io::seifert_from_json<K>(doc, f)));
    });
}

json cmd_primitive(const Options& o) {
    const json doc = read_document(o.input);
    const FieldSpec f = io::field_of(doc);
    const std::size_t bound = o.bound ? o.bound : o.support_bound;
    return with_field(f, [&](auto tag) -> json {
        using K = typename decltype(tag)::type;
        const auto s = io::seifert_from_json<K>(doc, f);
        const auto r = primitivity_decide(s, bound);
        if (!r.primitive)
            throw domain_failure{"NotPrimitiveUpTo",
                                 {{"bound", bound},
                                  {"decisive", r.decisive},
                                  {"message", r.decisive ? "e(1-e) is not nilpotent" : "no inverse with support up to the bound"}}};
        const auto& cert = *r.certificate;
        const auto d = covering_presentation(s);
        const auto series = series_mat_inverse(embed(d, o.degree));
        return {{"primitive", true},
                {"method", r.method},
                {"bound", bound},
                {"certificate", io::to_json(cert)},
                {"series_agrees", series && *series == embed(cert.inverse, o.degree)},
                {"degree", o.degree}};
    });
}

json cmd_split(const Options& o) {
    const json doc = read_document(o.input);
    const FieldSpec f = io::field_of(doc);
    return with_field(f, [&](auto tag) -> json {
        using K = typename decltype(tag)::type;
        const auto s = io::seifert_from_json<K>(doc, f);
        const auto split = bhs_split(s);
        if (!split) throw domain_failure{"NotNearProjection", {{"message", "e(1-e) is not nilpotent"}}};
        const auto cert = near_projection_certificate(s, *split);
        return {{"split", io::to_json(*split)}, {"nilpotency_index", *cert.nilpotency}};
    });
}

json cmd_verify(const Options& o) {
    const json doc = read_document(o.input);
    json cert_doc = read_document(o.certificate);
    if (cert_doc.is_object() && cert_doc.contains("certificate")) cert_doc = cert_doc["certificate"];
    const FieldSpec f = io::field_of(doc);
    return with_field(f, [&](auto tag) -> json {
        using K = typename decltype(tag)::type;
        const auto s = io::seifert_from_json<K>(doc, f);
        const auto cert = io::certificate_from_json<K>(cert_doc, f);
        if (cert.inverse.mu() != s.mu() || cert.inverse.rows() != s.size() || cert.inverse.cols() != s.size())
            throw domain_failure{"CertificateInvalid", {{"message", "inverse has the wrong shape"}}};
        if (!verify_certificate(s, cert))
            throw domain_failure{"CertificateInvalid", {{"message", "product identities or split check failed"}}};
        return {{"valid", true}, {"split_checked", cert.split.has_value()}};
    });
}

json cmd_check_flk(const Options& o) {
    const json doc = read_document(o.input);
    const FieldSpec f = io::field_of(doc);
    return with_field(f, [&](auto tag) -> json {
        using K = typename decltype(tag)::type;
        const auto d = matrix_input<K>(doc, f);
        if (!d.square()) throw domain_failure{"NotFlk", {{"message", "matrix is not square"}}};
        try {
            const auto flk = check_flk(d);
            return {{"flk", true},
                    {"augmentation", io::rows_to_json(flk.augmentation)},
                    {"augmentation_inverse", io::rows_to_json(flk.augmentation_inverse)}};
        } catch (const not_flk& e) {
            throw domain_failure{"NotFlk", {{"message", e.what()}, {"augmentation", io::rows_to_json(augment(d))}}};
        }
    });
}

json cmd_linearize(const Options& o) {
    const json doc = read_document(o.input);
    const FieldSpec f = io::field_of(doc);
    return with_field(f, [&](auto tag) -> json {
        using K = typename decltype(tag)::type;
        const auto d = matrix_input<K>(doc, f);
        return io::to_json(mayer_vietoris(d, tree_pair_input(d, o.tree, o.tree0)));
    });
}

json cmd_transversalize(const Options& o) {
    const json doc = read_document(o.input);
    const FieldSpec f = io::field_of(doc);
    return with_field(f, [&](auto tag) -> json {
        using K = typename decltype(tag)::type;
        const auto d = matrix_input<K>(doc, f);
        const TreePair pair = tree_pair_input(d, o.tree, o.tree0);
        const auto t = transversalize(check_flk(d), pair);
        json out = {{"seifert", io::to_json(t.module)},
                    {"refine", io::rows_to_json(t.refine)},
                    {"t0", io::to_json(pair.t0)},
                    {"t1", io::to_json(pair.t1)}};
        if (is_seifert(doc)) {
            const auto problem = morphism_problem(
                SeifertMorphism<K>{io::seifert_from_json<K>(doc, f), t.module, t.refine});
            out["refine_check"] = problem.empty();
            if (!problem.empty()) out["refine_problem"] = problem;
        }
        return out;
    });
}

json cmd_alexander(const Options& o) {
    const json doc = read_document(o.input);
    const FieldSpec f = io::field_of(doc);
    return with_field(f, [&](auto tag) -> json {
        using K = typename decltype(tag)::type;
        return {{"alexander", alexander(io::seifert_from_json<K>(doc, f)).str()}};
    });
}

json cmd_abel_det(const Options& o) {
    const json doc = read_document(o.input);
    const FieldSpec f = io::field_of(doc);
    return with_field(f, [&](auto tag) -> json {
        using K = typename decltype(tag)::type;
        return {{"abel_det", abel_det_class(matrix_input<K>(doc, f)).str()},
                {"invariant", "abelianized determinant class"}};
    });
}

json cmd_torsion(const Options& o) {
    const json doc = read_document(o.input);
    const FieldSpec f = io::chain_field(doc);
    return with_field(f, [&](auto tag) -> json {
        using K = typename decltype(tag)::type;
        return {{"torsion", io::to_json(torsion(io::chain_from_json<K>(doc, f)))},
                {"invariant", "abelianized alternating determinant product"}};
    });
}

json cmd_selftest(const Options& o) {
    std::uint64_t seed = 20241016;
    if (const char* env = std::getenv("LINKRING_SEED")) {
        char* end = nullptr;
        seed = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') throw parse_error("LINKRING_SEED must be a non-negative integer");
    }
    json report = selftest::run(seed, o.degree, o.support_bound);
    if (!report["ok"].get<bool>()) throw domain_failure{"SelftestFailed", report};
    return report;
}

int emit_error(const std::string& code, const json& detail, int status) {
    std::cout << json{{"error", code}, {"detail", detail}}.dump(2) << std::endl;
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with Seifert and Blanchfield modules over free group rings"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--degree", o.degree, "truncation degree for power series")->capture_default_str();
    app.add_option("--support-bound", o.support_bound, "default support bound for inverse search")->capture_default_str();

    std::vector<std::pair<CLI::App*, json (*)(const Options&)>> commands;
    auto with_input = [&](const char* name, const char* help, json (*fn)(const Options&)) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", o.input, "JSON document, or - for stdin")->required();
        commands.emplace_back(sub, fn);
        return sub;
    };
    with_input("cover", "covering presentation 1 - e + e z of a Seifert module", cmd_cover);
    with_input("primitive", "decide primitivity and print a certificate", cmd_primitive)
        ->add_option("--bound", o.bound, "support bound L for the inverse search");
    with_input("split", "Bass-Heller-Swan splitting (mu = 1)", cmd_split);
    with_input("verify-certificate", "re-check a primitivity certificate", cmd_verify)
        ->add_option("certificate", o.certificate, "certificate document")->required();
    with_input("check-flk", "test a square matrix for invertible augmentation", cmd_check_flk);
    for (auto [name, help, fn] : {std::tuple{"linearize", "Mayer-Vietoris presentation over a tree pair", cmd_linearize},
                                  std::tuple{"transversalize", "Seifert module of a presentation over a tree pair",
                                             cmd_transversalize}}) {
        auto* sub = with_input(name, help, fn);
        sub->add_option("--tree", o.tree, "comma-separated vertices of T1 (closure applied)");
        sub->add_option("--tree0", o.tree0, "extra vertices added to T0");
    }
    with_input("alexander", "Alexander polynomial (mu = 1)", cmd_alexander);
    with_input("abel-det", "abelianized determinant class", cmd_abel_det);
    with_input("torsion", "alternating determinant product of a chain", cmd_torsion);
    commands.emplace_back(app.add_subcommand("selftest", "randomized self checks (seed: LINKRING_SEED)"), cmd_selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error("UsageError", e.what(), 2);
    }

    try {
        for (auto& [sub, fn] : commands)
            if (sub->parsed()) {
                std::cout << fn(o).dump(2) << std::endl;
                return 0;
            }
    } catch (const domain_failure& e) {
        return emit_error(e.code, e.detail, 1);
    } catch (const parse_error& e) {
        return emit_error(e.code(), e.what(), 2);
    } catch (const nlohmann::json::exception& e) {
        return emit_error("ParseError", e.what(), 2);
    } catch (const linkring::error& e) {
        return emit_error(e.code(), json{{"message", e.what()}, {"internal", e.internal()}}, 1);
    } catch (const std::exception& e) {
        return emit_error("InternalError", json{{"message", e.what()}, {"internal", true}}, 1);
    }
    return 1;
}
