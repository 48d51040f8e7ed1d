#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bc1 {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational coefficient field. boost keeps the canonical form
/// (denominator > 0, gcd(num, den) = 1) on every operation.
using Rational = boost::multiprecision::cpp_rational;

/// n/d with arbitrary signs; d == 0 is an error.
inline Rational make_rational(Integer n, Integer d) {
    if (d == 0) throw std::domain_error("make_rational: zero denominator");
    return Rational(std::move(n)) / Rational(std::move(d));
}

inline Rational make_rational(std::int64_t n, std::int64_t d) {
    return make_rational(Integer(n), Integer(d));
}

/// Parses "p", "-p/q" or "p/q" (whitespace-free).
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: cannot parse '" + text + "'");
    }
}

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).convert_to<std::string>();
    if (denominator(r) != 1) s += "/" + denominator(r).convert_to<std::string>();
    return s;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Pochhammer symbol (a)_n = a(a+1)...(a+n-1).
inline Rational pochhammer(const Rational& a, int n) {
    Rational out = 1;
    for (int j = 0; j < n; ++j) out *= a + j;
    return out;
}

inline Rational factorial(int n) {
    Rational out = 1;
    for (int j = 2; j <= n; ++j) out *= j;
    return out;
}

}  // namespace bc1
