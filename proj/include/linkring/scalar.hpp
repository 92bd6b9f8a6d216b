#pragma once

// Exact coefficient fields: the rationals (GMP) and prime fields GF(p).
//
// Element types carry their own arithmetic operators. Anything that has to
// manufacture a constant (zero, one, a parsed literal) goes through a
// FieldSpec, which is what containers store alongside their entries.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

#include "linkring/errors.hpp"

namespace linkring {

using Rational = mpq_class;

/// Runtime description of the coefficient field.
struct FieldSpec {
    enum class Kind { rationals, prime };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {}; }

    static FieldSpec prime(std::uint32_t p) {
        if (!is_prime(p)) throw invalid_argument("GF(p) requires p prime, got " + std::to_string(p));
        return {Kind::prime, p};
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::string name() const {
        return kind == Kind::rationals ? std::string("Q") : "GF(" + std::to_string(p) + ")";
    }

    /// Accepts "Q", "QQ", "rationals" and "GF(p)".
    static FieldSpec parse(std::string_view s) {
        if (s == "Q" || s == "QQ" || s == "rationals") return rationals();
        if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
            auto digits = s.substr(3, s.size() - 4);
            std::uint32_t p = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
            if (ec != std::errc() || ptr != digits.data() + digits.size())
                throw parse_error("bad prime in field '" + std::string(s) + "'");
            if (!is_prime(p)) throw parse_error("GF(p) requires p prime: '" + std::string(s) + "'");
            return {Kind::prime, p};
        }
        throw parse_error("unknown field '" + std::string(s) + "'");
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Element of GF(p). A default-constructed Zp is the zero of an unspecified
/// prime field and adopts the modulus of whatever it is combined with.
class Zp {
public:
    Zp() = default;
    Zp(std::int64_t v, std::uint32_t p) : p_(p) {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    Zp inverse() const {
        if (v_ == 0) throw not_invertible("inverse of zero in GF(" + std::to_string(p_) + ")");
        // Fermat: v^(p-2).
        std::uint64_t result = 1, base = v_, e = p_ - 2;
        while (e) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return raw(static_cast<std::uint32_t>(result), p_);
    }

    Zp& operator+=(const Zp& o) {
        adopt(o);
        std::uint64_t s = std::uint64_t(v_) + o.v_;
        v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
        return *this;
    }
    Zp& operator-=(const Zp& o) {
        adopt(o);
        v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
        return *this;
    }
    Zp& operator*=(const Zp& o) {
        adopt(o);
        v_ = static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % (p_ ? p_ : 1));
        return *this;
    }
    Zp& operator/=(const Zp& o) {
        adopt(o);
        return *this *= o.inverse();
    }

    friend Zp operator+(Zp a, const Zp& b) { return a += b; }
    friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
    friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
    friend Zp operator/(Zp a, const Zp& b) { return a /= b; }
    friend Zp operator-(const Zp& a) { return raw(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
    friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Zp& a, const Zp& b) { return a.v_ != b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Zp& a) { return os << a.v_; }

private:
    static Zp raw(std::uint32_t v, std::uint32_t p) {
        Zp z;
        z.v_ = v;
        z.p_ = p;
        return z;
    }
    void adopt(const Zp& o) {
        if (p_ == 0) p_ = o.p_;
    }

    std::uint32_t v_ = 0;
    std::uint32_t p_ = 0;
};

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr FieldSpec::Kind kind = FieldSpec::Kind::rationals;

    static Rational from_int(const FieldSpec&, std::int64_t v) { return Rational(static_cast<long>(v)); }

    static bool is_zero(const Rational& x) { return sgn(x) == 0; }

    static Rational inverse(const Rational& x) {
        if (is_zero(x)) throw not_invertible("inverse of zero rational");
        return Rational(1) / x;
    }

    /// "p/q" with q > 0 and gcd 1, or "p" when q = 1.
    static std::string to_string(const Rational& x) { return x.get_str(); }

    static Rational parse(const FieldSpec&, std::string_view s) {
        if (s.empty()) throw parse_error("empty rational");
        for (char c : s)
            if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
                throw parse_error("bad rational '" + std::string(s) + "'");
        Rational r;
        if (r.set_str(std::string(s), 10) != 0) throw parse_error("bad rational '" + std::string(s) + "'");
        if (sgn(r.get_den()) == 0) throw parse_error("zero denominator in '" + std::string(s) + "'");
        r.canonicalize();
        return r;
    }
};

template <>
struct scalar_traits<Zp> {
    static constexpr FieldSpec::Kind kind = FieldSpec::Kind::prime;

    static Zp from_int(const FieldSpec& f, std::int64_t v) { return Zp(v, f.p); }

    static bool is_zero(const Zp& x) { return x.value() == 0; }

    static Zp inverse(const Zp& x) { return x.inverse(); }

    /// Canonical representative 0..p-1.
    static std::string to_string(const Zp& x) { return std::to_string(x.value()); }

    /// Accepts any integer literal (reduced mod p) or a fraction "a/b".
    static Zp parse(const FieldSpec& f, std::string_view s) {
        auto slash = s.find('/');
        auto num = parse_int(f, s.substr(0, slash));
        if (slash == std::string_view::npos) return num;
        auto den = parse_int(f, s.substr(slash + 1));
        if (den.value() == 0) throw parse_error("zero denominator in '" + std::string(s) + "'");
        return num / den;
    }

private:
    static Zp parse_int(const FieldSpec& f, std::string_view s) {
        bool neg = !s.empty() && s.front() == '-';
        if (neg) s.remove_prefix(1);
        if (s.empty()) throw parse_error("bad integer literal");
        std::int64_t acc = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw parse_error("bad integer literal '" + std::string(s) + "'");
            acc = (acc * 10 + (c - '0')) % f.p;
        }
        return Zp(neg ? -acc : acc, f.p);
    }
};

template <class K>
concept FieldElement = requires { scalar_traits<K>::kind; };

template <FieldElement K>
K zero(const FieldSpec& f) { return scalar_traits<K>::from_int(f, 0); }

template <FieldElement K>
K one(const FieldSpec& f) { return scalar_traits<K>::from_int(f, 1); }

template <FieldElement K>
K from_int(const FieldSpec& f, std::int64_t v) { return scalar_traits<K>::from_int(f, v); }

template <FieldElement K>
bool is_zero(const K& x) { return scalar_traits<K>::is_zero(x); }

template <FieldElement K>
K inverse(const K& x) { return scalar_traits<K>::inverse(x); }

template <FieldElement K>
std::string to_string(const K& x) { return scalar_traits<K>::to_string(x); }

template <FieldElement K>
K parse_scalar(const FieldSpec& f, std::string_view s) { return scalar_traits<K>::parse(f, s); }

/// "Positive" in the sense used by normalizations: sign over Q, nonzero over GF(p).
inline bool is_positive(const Rational& x) { return sgn(x) > 0; }
inline bool is_positive(const Zp& x) { return x.value() != 0; }

template <class T>
struct type_tag {
    using type = T;
};

/// Calls `fn(type_tag<K>{})` with K the element type of `f`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& f, Fn&& fn) {
    if (f.kind == FieldSpec::Kind::rationals) return fn(type_tag<Rational>{});
    return fn(type_tag<Zp>{});
}

}  // namespace linkring
