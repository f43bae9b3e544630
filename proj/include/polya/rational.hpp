#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace polya {

/// Arbitrary-precision exact rational. Expression templates are disabled so
/// that `auto` behaves like a value everywhere.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p/q" or "p" (optional leading sign). Throws Error(Parse) on
/// malformed input or a zero denominator; `field` is quoted in the message.
Rational parse_rational(std::string_view text, std::string_view field = "value");

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace polya
