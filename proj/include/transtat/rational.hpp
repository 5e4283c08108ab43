#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace transtat {

using Integer = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = boost::multiprecision::mpq_rational;

using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" into a canonical rational.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Renders as "p" or "p/q" (denominator omitted when 1).
std::string rational_to_string(const Rational& value);

}  // namespace transtat
