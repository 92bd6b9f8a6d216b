#pragma once

// JSON documents for every value the CLI reads or writes. Printing is
// canonical (sorted supports, reduced rationals) so parse then print is the
// identity on printed documents.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "linkring/blanchfield.hpp"
#include "linkring/errors.hpp"
#include "linkring/free_group.hpp"
#include "linkring/group_ring.hpp"
#include "linkring/laurent.hpp"
#include "linkring/matrix.hpp"
#include "linkring/scalar.hpp"
#include "linkring/seifert.hpp"

namespace linkring::io {

using json = nlohmann::json;

namespace detail {

inline const json& member(const json& j, const char* key) {
    if (!j.is_object()) throw parse_error(std::string("expected an object with key '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(std::string("missing key '") + key + "'");
    return *it;
}

inline const json& array(const json& j, const char* what) {
    if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
    return j;
}

inline std::size_t count(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw parse_error(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

inline std::string text(const json& j, const char* what) {
    if (!j.is_string()) throw parse_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

}  // namespace detail

// ---- scalars, words, fields -------------------------------------------------

template <FieldElement K>
json to_json(const K& x) {
    return to_string(x);
}

/// Strings in canonical form; integer literals are also accepted.
template <FieldElement K>
K scalar_from_json(const json& j, const FieldSpec& f) {
    if (j.is_number_integer()) return parse_scalar<K>(f, std::to_string(j.get<long long>()));
    return parse_scalar<K>(f, detail::text(j, "coefficient"));
}

inline json to_json(const Word& w) { return w.str(); }

inline Word word_from_json(const json& j) { return Word::parse(detail::text(j, "word")); }

/// Reads "field"; absent means Q.
inline FieldSpec field_of(const json& doc) {
    if (!doc.is_object()) throw parse_error("document must be a JSON object");
    auto it = doc.find("field");
    if (it == doc.end()) return FieldSpec::rationals();
    return FieldSpec::parse(detail::text(*it, "field"));
}

inline int mu_of(const json& doc) {
    const auto mu = detail::count(detail::member(doc, "mu"), "mu");
    if (mu < 1 || mu > 64) throw parse_error("mu must be in 1..64");
    return static_cast<int>(mu);
}

// ---- dense matrices ---------------------------------------------------------

template <FieldElement K>
json rows_to_json(const Mat<K>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <FieldElement K>
Mat<K> rows_from_json(const json& j, const FieldSpec& f, std::size_t rows, std::size_t cols) {
    detail::array(j, "matrix");
    if (j.size() != rows) throw parse_error("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    Mat<K> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        detail::array(j[i], "matrix row");
        if (j[i].size() != cols) throw parse_error("matrix row " + std::to_string(i) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json<K>(j[i][c], f);
    }
    return m;
}

/// {"rows", "cols", "data"}: keeps the shape of empty matrices.
template <FieldElement K>
json to_json(const Mat<K>& m) {
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows_to_json(m)}};
}

template <FieldElement K>
Mat<K> mat_from_json(const json& j, const FieldSpec& f) {
    return rows_from_json<K>(detail::member(j, "data"), f, detail::count(detail::member(j, "rows"), "rows"),
                             detail::count(detail::member(j, "cols"), "cols"));
}

// ---- group ring ---------------------------------------------------------------

template <FieldElement K>
json to_json(const GroupRingElem<K>& a) {
    json terms = json::array();
    for (const auto& [w, c] : a.terms()) terms.push_back({{"word", w.str()}, {"coeff", to_string(c)}});
    return terms;
}

template <FieldElement K>
GroupRingElem<K> elem_from_json(const json& j, const FieldSpec& f, int mu) {
    GroupRingElem<K> a(f, mu);
    for (const auto& term : detail::array(j, "group ring element")) {
        Word w = word_from_json(detail::member(term, "word"));
        if (w.max_generator() > mu) throw parse_error("word '" + w.str() + "' exceeds mu");
        a.add_term(w, scalar_from_json<K>(detail::member(term, "coeff"), f));
    }
    return a;
}

template <FieldElement K>
json to_json(const GroupRingMatrix<K>& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        entries.push_back(std::move(row));
    }
    return {{"field", m.field().name()}, {"mu", m.mu()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

template <FieldElement K>
GroupRingMatrix<K> gr_matrix_from_json(const json& j, const FieldSpec& f) {
    const int mu = mu_of(j);
    const auto rows = detail::count(detail::member(j, "rows"), "rows");
    const auto cols = detail::count(detail::member(j, "cols"), "cols");
    const json& entries = detail::array(detail::member(j, "entries"), "entries");
    if (entries.size() != rows) throw parse_error("entries has the wrong number of rows");
    GroupRingMatrix<K> m(f, mu, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!entries[i].is_array() || entries[i].size() != cols) throw parse_error("entries row has the wrong length");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = elem_from_json<K>(entries[i][c], f, mu);
    }
    return m;
}

// ---- Seifert modules and certificates ----------------------------------------

template <FieldElement K>
json to_json(const SeifertModule<K>& s) {
    return {{"field", s.field().name()}, {"mu", s.mu()}, {"dims", s.dims()}, {"e", rows_to_json(s.e())}};
}

template <FieldElement K>
SeifertModule<K> seifert_from_json(const json& j, const FieldSpec& f) {
    const int mu = mu_of(j);
    std::vector<std::size_t> dims;
    for (const auto& d : detail::array(detail::member(j, "dims"), "dims")) dims.push_back(detail::count(d, "dims entry"));
    if (dims.size() != static_cast<std::size_t>(mu)) throw parse_error("dims must have mu entries");
    std::size_t n = 0;
    for (auto d : dims) n += d;
    if (n > 4096) throw parse_error("module too large");
    return SeifertModule<K>(std::move(dims), rows_from_json<K>(detail::member(j, "e"), f, n, n));
}

template <FieldElement K>
json to_json(const SplittingData<K>& s) {
    return {{"plus", s.plus}, {"minus", s.minus}, {"basis", rows_to_json(s.basis)}};
}

template <FieldElement K>
SplittingData<K> split_from_json(const json& j, const FieldSpec& f) {
    SplittingData<K> s;
    for (const auto& x : detail::array(detail::member(j, "plus"), "plus")) s.plus.push_back(detail::count(x, "plus"));
    for (const auto& x : detail::array(detail::member(j, "minus"), "minus")) s.minus.push_back(detail::count(x, "minus"));
    if (s.plus.size() != s.minus.size()) throw parse_error("plus and minus differ in length");
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.plus.size(); ++i) n += s.plus[i] + s.minus[i];
    s.basis = rows_from_json<K>(detail::member(j, "basis"), f, n, n);
    return s;
}

template <FieldElement K>
json to_json(const PrimitivityCertificate<K>& c) {
    json out = {{"inverse", to_json(c.inverse)}, {"split", nullptr}, {"nilpotency_index", nullptr}};
    if (c.split) out["split"] = to_json(*c.split);
    if (c.nilpotency) out["nilpotency_index"] = *c.nilpotency;
    return out;
}

template <FieldElement K>
PrimitivityCertificate<K> certificate_from_json(const json& j, const FieldSpec& f) {
    PrimitivityCertificate<K> c;
    const json& inv = detail::member(j, "inverse");
    if (!(field_of(inv) == f)) throw parse_error("certificate inverse is over a different field");
    c.inverse = gr_matrix_from_json<K>(inv, f);
    if (auto it = j.find("split"); it != j.end() && !it->is_null()) c.split = split_from_json<K>(*it, f);
    if (auto it = j.find("nilpotency_index"); it != j.end() && !it->is_null())
        c.nilpotency = detail::count(*it, "nilpotency_index");
    return c;
}

// ---- Laurent classes -----------------------------------------------------------

template <FieldElement K>
json to_json(const LaurentPoly<K>& p) {
    return p.str();
}

template <FieldElement K>
json to_json(const TorsionClass<K>& t) {
    return {{"numerator", t.numerator.str()}, {"denominator", t.denominator.str()}};
}

template <FieldElement K>
TorsionClass<K> torsion_from_json(const json& j, const FieldSpec& f, int mu) {
    return {LaurentPoly<K>::parse(f, mu, detail::text(detail::member(j, "numerator"), "numerator")),
            LaurentPoly<K>::parse(f, mu, detail::text(detail::member(j, "denominator"), "denominator"))};
}

// ---- chains, trees, Mayer-Vietoris presentations ----------------------------

template <FieldElement K>
json chain_to_json(const std::vector<SeifertModule<K>>& chain) {
    json c = json::array();
    for (const auto& s : chain) c.push_back(to_json(s));
    return {{"chain", c}};
}

/// The field of the first module decides; every module must agree.
template <FieldElement K>
std::vector<SeifertModule<K>> chain_from_json(const json& j, const FieldSpec& f) {
    std::vector<SeifertModule<K>> chain;
    for (const auto& s : detail::array(detail::member(j, "chain"), "chain")) {
        if (!(field_of(s) == f)) throw parse_error("chain modules must share one field");
        chain.push_back(seifert_from_json<K>(s, f));
    }
    return chain;
}

inline FieldSpec chain_field(const json& j) {
    const json& c = detail::array(detail::member(j, "chain"), "chain");
    if (c.empty()) throw parse_error("chain must be non-empty");
    return field_of(c.front());
}

inline json to_json(const CayleySubtree& t) {
    json v = json::array();
    for (const auto& w : t.vertices()) v.push_back(w.str());
    return v;
}

inline CayleySubtree tree_from_json(const json& j, int mu) {
    std::vector<Word> words;
    for (const auto& w : detail::array(j, "tree")) words.push_back(word_from_json(w));
    for (const auto& w : words)
        if (w.max_generator() > mu) throw parse_error("tree vertex '" + w.str() + "' exceeds mu");
    return geodesic_closure(mu, words);
}

namespace detail {

inline json tree_side(const std::vector<Word>& vertices, const std::vector<std::vector<Word>>& edges) {
    json v = json::array(), e = json::array();
    for (const auto& w : vertices) v.push_back(w.str());
    for (const auto& type : edges) {
        json t = json::array();
        for (const auto& g : type) t.push_back(g.str());
        e.push_back(std::move(t));
    }
    return {{"vertices", v}, {"edges", e}};
}

}  // namespace detail

template <FieldElement K>
json to_json(const MVPresentation<K>& mv) {
    json d_edge = json::array();
    for (const auto& m : mv.d_edge) d_edge.push_back(to_json(m));
    return {{"field", mv.d_vertex.field().name()},
            {"mu", mv.trees.t0.mu()},
            {"n", mv.n},
            {"t0", detail::tree_side(mv.vertices[0], mv.edges[0])},
            {"t1", detail::tree_side(mv.vertices[1], mv.edges[1])},
            {"d_vertex", to_json(mv.d_vertex)},
            {"d_edge", d_edge},
            {"f_plus", mv.f_plus},
            {"f_minus", mv.f_minus}};
}

template <FieldElement K>
MVPresentation<K> mv_from_json(const json& j, const FieldSpec& f) {
    const int mu = mu_of(j);
    MVPresentation<K> mv;
    mv.n = detail::count(detail::member(j, "n"), "n");
    const char* sides[2] = {"t0", "t1"};
    for (int s = 0; s < 2; ++s) {
        const json& side = detail::member(j, sides[s]);
        std::vector<Word> vertices;
        for (const auto& w : detail::array(detail::member(side, "vertices"), "vertices")) vertices.push_back(word_from_json(w));
        const CayleySubtree tree = geodesic_closure(mu, vertices);
        if (tree.vertex_count() != vertices.size() || !std::equal(vertices.begin(), vertices.end(), tree.vertices().begin()))
            throw parse_error(std::string(sides[s]) + " vertices are not a canonical subtree listing");
        mv.vertices[s] = std::move(vertices);
        (s == 0 ? mv.trees.t0 : mv.trees.t1) = tree;
        for (int i = 1; i <= mu; ++i) {
            const json& types = detail::array(detail::member(side, "edges"), "edges");
            if (types.size() != static_cast<std::size_t>(mu)) throw parse_error("edges must list mu types");
            std::vector<Word> sources;
            for (const auto& w : detail::array(types[static_cast<std::size_t>(i - 1)], "edge list")) sources.push_back(word_from_json(w));
            if (sources != tree.edges(i)) throw parse_error("edge list does not match the tree");
            mv.edges[s].push_back(std::move(sources));
        }
    }
    mv.d_vertex = mat_from_json<K>(detail::member(j, "d_vertex"), f);
    for (const auto& m : detail::array(detail::member(j, "d_edge"), "d_edge")) mv.d_edge.push_back(mat_from_json<K>(m, f));
    for (const char* key : {"f_plus", "f_minus"}) {
        auto& target = std::string(key) == "f_plus" ? mv.f_plus : mv.f_minus;
        for (const auto& type : detail::array(detail::member(j, key), key)) {
            std::vector<std::size_t> idx;
            for (const auto& x : detail::array(type, key)) idx.push_back(detail::count(x, key));
            target.push_back(std::move(idx));
        }
    }
    if (mv.d_edge.size() != static_cast<std::size_t>(mu) || mv.f_plus.size() != static_cast<std::size_t>(mu) ||
        mv.f_minus.size() != static_cast<std::size_t>(mu))
        throw parse_error("Mayer-Vietoris document must list mu edge types");
    return mv;
}

/// Parses text as JSON, mapping syntax errors to parse_error.
inline json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace linkring::io
