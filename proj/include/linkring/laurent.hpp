#pragma once

// Commutative Laurent polynomials K[z_1^{±1}, ..., z_mu^{±1}] and their
// matrices: the target of abelianization, where determinant classes live.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linkring/errors.hpp"
#include "linkring/scalar.hpp"

namespace linkring {

using Exponents = std::vector<int>;

template <FieldElement K>
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, K>;  // lexicographic on exponent vectors

    LaurentPoly() = default;
    LaurentPoly(FieldSpec field, int mu) : field_(field), mu_(mu) {}

    static LaurentPoly constant(FieldSpec field, int mu, const K& c) {
        LaurentPoly p(field, mu);
        p.add_term(Exponents(static_cast<std::size_t>(mu), 0), c);
        return p;
    }
    static LaurentPoly one(FieldSpec field, int mu) { return constant(field, mu, linkring::one<K>(field)); }

    static LaurentPoly monomial(FieldSpec field, int mu, Exponents e, const K& c) {
        if (e.size() != static_cast<std::size_t>(mu)) throw dimension_mismatch("monomial exponent length != mu");
        LaurentPoly p(field, mu);
        p.add_term(std::move(e), c);
        return p;
    }

    /// z_i for i in 1..mu.
    static LaurentPoly variable(FieldSpec field, int mu, int i) {
        Exponents e(static_cast<std::size_t>(mu), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        return monomial(field, mu, e, linkring::one<K>(field));
    }

    const FieldSpec& field() const { return field_; }
    int mu() const { return mu_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponents& e, const K& c) {
        if (linkring::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (linkring::is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Coefficient of the lexicographically greatest monomial.
    const K& leading_coefficient() const { return terms_.rbegin()->second; }
    const Exponents& leading_exponents() const { return terms_.rbegin()->first; }

    /// Componentwise minimum exponent vector (zero vector for the zero polynomial).
    Exponents min_exponents() const {
        Exponents m(static_cast<std::size_t>(mu_), 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = first ? e[k] : std::min(m[k], e[k]);
            first = false;
        }
        return m;
    }

    /// Multiplies by z^shift.
    LaurentPoly shifted(const Exponents& shift) const {
        LaurentPoly r(field_, mu_);
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            for (std::size_t k = 0; k < f.size(); ++k) f[k] += shift[k];
            r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
        }
        return r;
    }

    /// Value at z_1 = ... = z_mu = 1.
    K eval_at_ones() const {
        K s = linkring::zero<K>(field_);
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Representative of the class modulo units ±z^k (Q) or c·z^k (GF(p)):
    /// every variable's minimal exponent is 0 and the leading coefficient is
    /// positive (Q) or 1 (GF(p)).
    LaurentPoly normalized() const {
        if (is_zero()) return *this;
        Exponents m = min_exponents();
        for (auto& x : m) x = -x;
        LaurentPoly r = shifted(m);
        const K lead = r.leading_coefficient();
        if constexpr (scalar_traits<K>::kind == FieldSpec::Kind::rationals) {
            if (!is_positive(lead))
                for (auto& [e, c] : r.terms_) c = -c;
        } else {
            K inv = linkring::inverse(lead);
            for (auto& [e, c] : r.terms_) c *= inv;
        }
        return r;
    }

    /// True when the polynomial is c·z^k with c a unit of the coefficient ring
    /// used for normalization (±1 over Q, any nonzero c over GF(p)).
    bool is_unit_monomial() const {
        if (terms_.size() != 1) return false;
        auto n = normalized();
        return n.leading_coefficient() == linkring::one<K>(field_);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r(a.field_, a.mu_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        a.check(b);
        LaurentPoly r(a.field_, a.mu_);
        Exponents e(static_cast<std::size_t>(a.mu_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    LaurentPoly& operator*=(const K& s) {
        if (linkring::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.mu_ == b.mu_ && a.terms_ == b.terms_;
    }

    /// Human-readable text, terms in decreasing lexicographic order, e.g.
    /// "z^2 - z + 1" (mu = 1) or "z1*z2^-1 + 2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string t = term_string(it->first, it->second);
            if (first) {
                out = t;
                first = false;
            } else if (t[0] == '-') {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
        }
        return out;
    }

    /// Inverse of str().
    static LaurentPoly parse(FieldSpec field, int mu, std::string_view text) {
        LaurentPoly p(field, mu);
        std::string s(text);
        if (s == "0") return p;
        // Split on " + " and " - " separators; a leading '-' belongs to the first term.
        std::vector<std::pair<bool, std::string>> pieces;
        std::size_t pos = 0;
        bool negative = false;
        if (!s.empty() && s[0] == '-') {
            negative = true;
            pos = 1;
        }
        while (true) {
            std::size_t plus = s.find(" + ", pos), minus = s.find(" - ", pos);
            std::size_t next = std::min(plus, minus);
            pieces.emplace_back(negative, s.substr(pos, next - pos));
            if (next == std::string::npos) break;
            negative = (next == minus);
            pos = next + 3;
        }
        for (auto& [neg, piece] : pieces) {
            auto [e, c] = parse_term(field, mu, piece);
            p.add_term(e, neg ? K(-c) : c);
        }
        return p;
    }

private:
    void check(const LaurentPoly& o) const {
        if (mu_ != o.mu_) throw dimension_mismatch("Laurent polynomials over different mu");
    }

    std::string var_name(std::size_t k) const { return mu_ == 1 ? std::string("z") : "z" + std::to_string(k + 1); }

    std::string term_string(const Exponents& e, const K& c) const {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += var_name(k);
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        const K unit = linkring::one<K>(field_);
        if (mono.empty()) return linkring::to_string(c);
        if (c == unit) return mono;
        if constexpr (scalar_traits<K>::kind == FieldSpec::Kind::rationals)
            if (c == K(-unit)) return "-" + mono;
        return linkring::to_string(c) + "*" + mono;
    }

    static std::pair<Exponents, K> parse_term(FieldSpec field, int mu, const std::string& piece) {
        if (piece.empty()) throw parse_error("empty Laurent term");
        Exponents e(static_cast<std::size_t>(mu), 0);
        K c = linkring::one<K>(field);
        std::vector<std::string> factors;
        std::size_t start = 0;
        while (true) {
            auto star = piece.find('*', start);
            factors.push_back(piece.substr(start, star - start));
            if (star == std::string::npos) break;
            start = star + 1;
        }
        for (std::size_t f = 0; f < factors.size(); ++f) {
            const std::string& tok = factors[f];
            if (tok.empty()) throw parse_error("bad Laurent term '" + piece + "'");
            if (tok[0] != 'z') {
                if (f != 0) throw parse_error("coefficient must come first in '" + piece + "'");
                c = parse_scalar<K>(field, tok);
                continue;
            }
            auto caret = tok.find('^');
            std::string name = tok.substr(0, caret);
            int var = 0;
            if (name == "z") {
                if (mu != 1) throw parse_error("bare 'z' needs mu = 1");
                var = 1;
            } else {
                try {
                    var = std::stoi(name.substr(1));
                } catch (...) {
                    throw parse_error("bad variable '" + name + "'");
                }
            }
            if (var < 1 || var > mu) throw parse_error("variable out of range in '" + piece + "'");
            int power = 1;
            if (caret != std::string::npos) {
                try {
                    power = std::stoi(tok.substr(caret + 1));
                } catch (...) {
                    throw parse_error("bad exponent in '" + tok + "'");
                }
            }
            e[static_cast<std::size_t>(var - 1)] += power;
        }
        return {e, c};
    }

    FieldSpec field_{};
    int mu_ = 0;
    TermMap terms_;
};

/// Exact quotient a/b in the Laurent ring, or nullopt when b does not divide a.
template <FieldElement K>
std::optional<LaurentPoly<K>> divide_exact(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    if (b.is_zero()) throw zero_determinant("division by the zero polynomial");
    const int mu = a.mu();
    LaurentPoly<K> q(a.field(), mu);
    if (a.is_zero()) return q;
    // Move both into the polynomial ring with no variable dividing them; then
    // ordinary lex long division decides divisibility.
    Exponents ma = a.min_exponents(), mb = b.min_exponents();
    Exponents na = ma, nb = mb;
    for (auto& x : na) x = -x;
    for (auto& x : nb) x = -x;
    LaurentPoly<K> r = a.shifted(na);
    const LaurentPoly<K> d = b.shifted(nb);
    const Exponents& ld = d.leading_exponents();
    const K lc = d.leading_coefficient();
    while (!r.is_zero()) {
        Exponents lr = r.leading_exponents();
        Exponents t(lr.size());
        for (std::size_t k = 0; k < t.size(); ++k) {
            t[k] = lr[k] - ld[k];
            if (t[k] < 0) return std::nullopt;
        }
        K c = r.leading_coefficient() / lc;
        auto step = LaurentPoly<K>::monomial(a.field(), mu, t, c);
        q += step;
        r -= step * d;
    }
    Exponents back(ma.size());
    for (std::size_t k = 0; k < back.size(); ++k) back[k] = ma[k] - mb[k];
    return q.shifted(back);
}

/// Univariate gcd (mu = 1), normalized.
template <FieldElement K>
LaurentPoly<K> gcd_univariate(LaurentPoly<K> a, LaurentPoly<K> b) {
    if (a.mu() != 1) throw invalid_argument("gcd_univariate requires mu = 1");
    a = a.normalized();
    b = b.normalized();
    while (!b.is_zero()) {
        // remainder of a by b, both polynomials in z with nonnegative exponents
        LaurentPoly<K> r = a;
        const int db = b.leading_exponents()[0];
        const K lc = b.leading_coefficient();
        while (!r.is_zero() && r.leading_exponents()[0] >= db) {
            auto t = LaurentPoly<K>::monomial(a.field(), 1, {r.leading_exponents()[0] - db}, r.leading_coefficient() / lc);
            r -= t * b;
        }
        a = std::move(b);
        b = r.is_zero() ? r : r.normalized();
    }
    return a.normalized();
}

template <FieldElement K>
struct LaurentMatrix {
    FieldSpec field;
    int mu = 0;
    std::size_t rows = 0, cols = 0;
    std::vector<LaurentPoly<K>> entries;

    LaurentMatrix() = default;
    LaurentMatrix(FieldSpec f, int m, std::size_t r, std::size_t c)
        : field(f), mu(m), rows(r), cols(c), entries(r * c, LaurentPoly<K>(f, m)) {}

    LaurentPoly<K>& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const LaurentPoly<K>& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.mu == b.mu && a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

/// Determinant by fraction-free (Bareiss) elimination. Rows are first shifted
/// into the polynomial ring; the shift is undone at the end, so the result is
/// the exact Laurent determinant.
template <FieldElement K>
LaurentPoly<K> determinant(const LaurentMatrix<K>& m) {
    if (m.rows != m.cols) throw dimension_mismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows;
    const FieldSpec f = m.field;
    if (n == 0) return LaurentPoly<K>::one(f, m.mu);

    std::vector<std::vector<LaurentPoly<K>>> a(n);
    Exponents total(static_cast<std::size_t>(m.mu), 0);
    for (std::size_t i = 0; i < n; ++i) {
        Exponents low(static_cast<std::size_t>(m.mu), 0);
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = m(i, j);
            if (e.is_zero()) continue;
            Exponents me = e.min_exponents();
            for (std::size_t k = 0; k < low.size(); ++k) low[k] = any ? std::min(low[k], me[k]) : me[k];
            any = true;
        }
        if (!any) return LaurentPoly<K>(f, m.mu);
        for (auto& x : low) x = -x;
        for (std::size_t k = 0; k < low.size(); ++k) total[k] += low[k];
        a[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) a[i].push_back(m(i, j).shifted(low));
    }

    bool negate = false;
    LaurentPoly<K> prev = LaurentPoly<K>::one(f, m.mu);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return LaurentPoly<K>(f, m.mu);
            std::swap(a[p], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly<K> num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                auto q = divide_exact(num, prev);
                if (!q) throw internal_error("BareissDivision", "inexact Bareiss division");
                a[i][j] = *std::move(q);
            }
        }
        prev = a[k][k];
    }
    LaurentPoly<K> det = a[n - 1][n - 1];
    if (negate) det = -det;
    for (auto& x : total) x = -x;
    return det.shifted(total);
}

/// Normalized numerator/denominator pair.
template <FieldElement K>
struct TorsionClass {
    LaurentPoly<K> numerator;
    LaurentPoly<K> denominator;

    friend bool operator==(const TorsionClass&, const TorsionClass&) = default;
};

}  // namespace linkring
