#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hungerlab/errors.hpp"

namespace hungerlab {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline Rational make_ratio(std::string_view num, std::string_view den) {
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw Error(Errc::malformed_token, "zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace detail

/// Parses an unsigned chain entry: "a" or "a/b" with decimal digits only.
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!detail::all_digits(text))
            throw Error(Errc::malformed_token, "bad rational '" + std::string(text) + "'");
        return detail::make_ratio(text, "1");
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
        throw Error(Errc::malformed_token, "bad rational '" + std::string(text) + "'");
    return detail::make_ratio(num, den);
}

/// Parses a signed exact value: "-a/b", "a", or a finite decimal such as "-1.25".
inline Rational parse_exact(std::string_view text) {
    bool negative = false;
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    Rational r;
    if (body.find('/') != std::string_view::npos) {
        r = parse_rational(body);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !detail::all_digits(whole)) ||
            (!frac.empty() && !detail::all_digits(frac)))
            throw Error(Errc::malformed_token, "bad decimal '" + std::string(text) + "'");
        std::string digits = std::string(whole) + std::string(frac);
        r = detail::make_ratio(digits, "1" + std::string(frac.size(), '0'));
    } else {
        r = parse_rational(body);
    }
    return negative ? Rational(-r) : r;
}

/// "a/b" in lowest terms, or "a" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Least common multiple of the (reduced) denominators.
inline Integer lcd(std::span<const Rational> values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

struct IntegerHash {
    std::size_t operator()(const Integer& z) const noexcept {
        std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
        const std::size_t limbs = mpz_size(z.get_mpz_t());
        for (std::size_t i = 0; i < limbs; ++i)
            h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
        return h;
    }
};

struct RationalHash {
    std::size_t operator()(const Rational& q) const noexcept {
        IntegerHash zh;
        return zh(q.get_num()) * 31 + zh(q.get_den());
    }
};

/// Hash for exact hunger vectors; equal values share canonical form so this is consistent with ==.
struct RationalVectorHash {
    std::size_t operator()(const std::vector<Rational>& v) const noexcept {
        RationalHash rh;
        std::size_t h = v.size();
        for (const auto& q : v) h ^= rh(q) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace hungerlab
