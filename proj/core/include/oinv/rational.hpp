#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace oinv {

using Integer = mpz_class;

/// Exact rational number, always kept canonical (positive denominator,
/// coprime numerator and denominator, zero as 0/1).
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);

/// Parses "a" or "a/b" with an optional leading sign. Throws oinv::Error on
/// malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace oinv
