#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orderdim {

// Exact rationals, always canonical (reduced, positive denominator).
using Rational = mpq_class;

// Accepts "p/q" or "p" with optional sign; kParseError otherwise.
Rational parse_rational(std::string_view text);

// "p/q", or "p" for integers.
std::string format_rational(const Rational& q);

}  // namespace orderdim
