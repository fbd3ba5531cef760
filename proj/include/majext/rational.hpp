#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <string>

namespace majext {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer floor(const Rational& q) {
    Integer num = boost::multiprecision::numerator(q);
    const Integer& den = boost::multiprecision::denominator(q);
    Integer quot = num / den; // truncates toward zero
    if (num < 0 && quot * den != num)
        --quot;
    return quot;
}

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_exact_string(const Rational& q) {
    if (is_integer(q))
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

/// Decimal rendering with 12 significant digits.
inline std::string to_decimal_string(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string to_decimal_string(const Rational& q) {
    return to_decimal_string(q.convert_to<double>());
}

/// Integer power with a possibly negative exponent; base must be nonzero when exp < 0.
inline Rational pow(const Rational& base, long exp) {
    Rational result = 1;
    Rational b = exp < 0 ? Rational(1) / base : base;
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    while (e != 0) {
        if (e & 1U)
            result *= b;
        b *= b;
        e >>= 1U;
    }
    return result;
}

} // namespace majext
