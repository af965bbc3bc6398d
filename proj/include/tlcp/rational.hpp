#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace tlcp {

// Exact rational scalar. Stored canonically: gcd(num, den) = 1, den > 0.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "p" or "p/q" with optional leading '-' on p. Rejects everything
// else, in particular decimal and floating-point notation, with ParseError.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0).
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

} // namespace tlcp
