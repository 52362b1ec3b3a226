#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace covdbl {

/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b" (whitespace around the tokens is ignored).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& r);

/// r^e for any integer e; r must be nonzero when e < 0.
Rational pow(const Rational& r, long e);

}  // namespace covdbl
