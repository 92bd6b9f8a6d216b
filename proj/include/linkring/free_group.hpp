#pragma once

// Reduced words in the free group F_mu and finite subtrees of its Cayley tree.
//
// Edge convention: a type-i edge joins g and z_i·g (left translation), so the
// geodesic from 1 to w runs through the suffixes of w. Matrices over the group
// ring act on vertices by right translation g -> g·w, which maps type-i edges
// to type-i edges; pushforward() follows that action.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "linkring/errors.hpp"

namespace linkring {

/// A letter is +k for z_k and -k for z_k^{-1} (k >= 1).
using Letter = int;

class Word {
public:
    Word() = default;

    /// Reduces the given letter sequence.
    explicit Word(const std::vector<Letter>& letters) {
        for (Letter l : letters) push_back(l);
    }

    static Word generator(int k, int exponent = 1) { return Word({exponent > 0 ? k : -k}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    /// Largest generator index that occurs (0 for the identity).
    int max_generator() const {
        int m = 0;
        for (Letter l : letters_) m = std::max(m, std::abs(l));
        return m;
    }

    Word inverse() const {
        Word w;
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
        return w;
    }

    /// Letters reversed (an anti-automorphism fixing every generator).
    Word reversed() const {
        Word w;
        w.letters_.assign(letters_.rbegin(), letters_.rend());
        return w;
    }

    /// Word with the first letter removed (parent in the Cayley tree).
    Word drop_first() const {
        Word w;
        if (!letters_.empty()) w.letters_.assign(letters_.begin() + 1, letters_.end());
        return w;
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word r = a;
        for (Letter l : b.letters_) r.push_back(l);
        return r;
    }

    /// Exponent sum of each generator 1..mu.
    std::vector<int> exponent_sums(int mu) const {
        std::vector<int> e(static_cast<std::size_t>(mu), 0);
        for (Letter l : letters_) {
            if (std::abs(l) > mu) throw invalid_argument("word uses a generator beyond mu");
            e[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
        }
        return e;
    }

    /// Canonical order: by length, then lexicographically with
    /// z_1 < z_1^{-1} < z_2 < z_2^{-1} < ...
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
        for (std::size_t k = 0; k < a.letters_.size(); ++k)
            if (auto c = letter_key(a.letters_[k]) <=> letter_key(b.letters_[k]); c != 0) return c;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Word&, const Word&) = default;

    /// Space-separated tokens `z<k>` / `z<k>^-1`; the identity prints as "".
    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k < letters_.size(); ++k) {
            if (k) s += ' ';
            s += 'z';
            s += std::to_string(std::abs(letters_[k]));
            if (letters_[k] < 0) s += "^-1";
        }
        return s;
    }

    /// Inverse of str(). Unreduced input is reduced.
    static Word parse(std::string_view text) {
        std::vector<Letter> letters;
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            if (tok.size() < 2 || tok[0] != 'z') throw parse_error("bad word token '" + tok + "'");
            int sign = 1;
            std::string_view body(tok);
            body.remove_prefix(1);
            if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
                sign = -1;
                body.remove_suffix(3);
            }
            if (body.empty() || body.size() > 6 || body[0] == '0') throw parse_error("bad word token '" + tok + "'");
            int k = 0;
            for (char c : body) {
                if (c < '0' || c > '9') throw parse_error("bad word token '" + tok + "'");
                k = k * 10 + (c - '0');
            }
            letters.push_back(sign * k);
        }
        return Word(letters);
    }

private:
    static int letter_key(Letter l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

    void push_back(Letter l) {
        if (l == 0) throw invalid_argument("letter 0 is not a generator");
        if (!letters_.empty() && letters_.back() == -l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    std::vector<Letter> letters_;
};

inline Word word_mul(const Word& a, const Word& b) { return a * b; }

/// All reduced words over z_1..z_mu of length <= max_len, in canonical order.
inline std::vector<Word> words_up_to(int mu, std::size_t max_len) {
    std::vector<Word> out{Word()};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k) {
            for (int g = 1; g <= mu; ++g)
                for (int s : {1, -1}) {
                    const auto& base = out[k].letters();
                    if (!base.empty() && base.back() == -s * g) continue;
                    auto letters = base;
                    letters.push_back(s * g);
                    out.emplace_back(letters);
                }
        }
        begin = end;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Finite subtree of the Cayley tree of F_mu containing the vertex 1.
class CayleySubtree {
public:
    explicit CayleySubtree(int mu = 1) : mu_(mu) { vertices_.insert(Word()); }

    int mu() const { return mu_; }
    const std::set<Word>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    bool contains(const Word& w) const { return vertices_.count(w) != 0; }

    /// Sources g of the type-i edges (g, z_i·g), in canonical order; i in 1..mu.
    std::vector<Word> edges(int i) const {
        std::vector<Word> out;
        const Word zi = Word::generator(i);
        for (const auto& g : vertices_)
            if (contains(zi * g)) out.push_back(g);
        return out;
    }

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (int i = 1; i <= mu_; ++i) n += edges(i).size();
        return n;
    }

    /// Vertex-set containment.
    bool subset_of(const CayleySubtree& o) const {
        return std::includes(o.vertices_.begin(), o.vertices_.end(), vertices_.begin(), vertices_.end());
    }

    /// Position of a vertex in canonical order.
    std::size_t index_of(const Word& w) const {
        auto it = vertices_.find(w);
        if (it == vertices_.end()) throw invalid_argument("'" + w.str() + "' is not a vertex");
        return static_cast<std::size_t>(std::distance(vertices_.begin(), it));
    }

    /// Checks identity membership, suffix closure and #edges = #vertices - 1.
    bool valid() const {
        if (!contains(Word())) return false;
        for (const auto& w : vertices_) {
            if (w.max_generator() > mu_) return false;
            if (!w.is_identity() && !contains(w.drop_first())) return false;
        }
        return edge_count() + 1 == vertices_.size();
    }

    friend bool operator==(const CayleySubtree&, const CayleySubtree&) = default;

    /// Adds w together with its geodesic to 1 (all suffixes of w).
    void extend(const Word& w) {
        if (w.max_generator() > mu_) throw invalid_argument("word '" + w.str() + "' exceeds mu");
        Word v = w;
        while (vertices_.insert(v).second && !v.is_identity()) v = v.drop_first();
    }

private:
    int mu_;
    std::set<Word> vertices_;
};

/// Smallest suffix-closed vertex set containing 1 and `words`.
template <class Range>
CayleySubtree geodesic_closure(int mu, const Range& words) {
    CayleySubtree t(mu);
    for (const Word& w : words) t.extend(w);
    return t;
}

inline CayleySubtree geodesic_closure(int mu, std::initializer_list<Word> words) {
    return geodesic_closure(mu, std::vector<Word>(words));
}

/// Closure of {g·w : g in T, w in support} together with T itself.
template <class Range>
CayleySubtree pushforward(const CayleySubtree& t, const Range& support) {
    std::vector<Word> all(t.vertices().begin(), t.vertices().end());
    for (const Word& g : t.vertices())
        for (const Word& w : support) all.push_back(g * w);
    return geodesic_closure(t.mu(), all);
}

inline CayleySubtree pushforward(const CayleySubtree& t, std::initializer_list<Word> support) {
    return pushforward(t, std::vector<Word>(support));
}

}  // namespace linkring

template <>
struct std::hash<linkring::Word> {
    std::size_t operator()(const linkring::Word& w) const noexcept {
        std::size_t h = w.length();
        for (int l : w.letters()) h = h * 1000003u ^ static_cast<std::size_t>(l + 64);
        return h;
    }
};
