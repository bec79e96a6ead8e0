#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropseq {

/// Exact rational number, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// num/den in canonical form. mpq_class(num, den) alone does not canonicalize.
Rational ratio(long num, long den);

/// Parses "p/q" or "p" with an optional leading minus. Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" string, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Smallest integer >= value.
long ceil_to_long(const Rational& value);

}  // namespace tropseq
