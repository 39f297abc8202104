#pragma once

#include <charconv>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>
#include <system_error>

#include "hungerlab/rational.hpp"

namespace hungerlab {

enum class Mode { rational, float64 };

inline std::string_view mode_name(Mode m) { return m == Mode::rational ? "rational" : "float"; }

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr Mode mode = Mode::rational;
    static constexpr bool exact = true;
    static Rational from_rational(const Rational& q) { return q; }
    static Rational from_count(unsigned long k) { return Rational(k); }
    static double to_double(const Rational& q) { return q.get_d(); }
    static std::string format(const Rational& q) { return to_string(q); }
};

template <>
struct ScalarTraits<double> {
    static constexpr Mode mode = Mode::float64;
    static constexpr bool exact = false;
    static double from_rational(const Rational& q) { return q.get_d(); }
    static double from_count(unsigned long k) { return static_cast<double>(k); }
    static double to_double(double x) { return x; }
    static std::string format(double x) {
        char buf[64];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
        if (ec != std::errc{}) return std::to_string(x);
        return std::string(buf, end);
    }
};

/// The two arithmetic modes a chain may use.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
T abs_value(const T& x) {
    if constexpr (std::same_as<T, Rational>)
        return abs(x);
    else
        return std::fabs(x);
}

template <Scalar T>
std::string format(const T& x) { return ScalarTraits<T>::format(x); }

}  // namespace hungerlab
