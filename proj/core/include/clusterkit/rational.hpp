#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace clusterkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "a/b" or a bare integer "a". Decimal and scientific notation are
// rejected so that no value ever passes through floating point.
Rational parse_rational(const std::string& text);

// Canonical "a/b" form, reduced, denominator always printed ("1/2", "0/1").
std::string format_rational(const Rational& q);

inline bool is_probability(const Rational& q) { return q >= 0 && q <= 1; }

// q^e by repeated squaring, exact.
Rational rational_pow(const Rational& q, std::uint64_t e);

BigInt ceil_rational(const Rational& q);

}  // namespace clusterkit
