#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tlacalc {

using Rational = mpq_class;

/// Canonical "p/q" text (or "p" when the denominator is 1).
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace tlacalc
