#pragma once

#include <gmpxx.h>

#include <string>

namespace channelgame {

/// Exact rational number used for all money amounts (fees, costs, bounds).
/// Always kept canonical (reduced, positive denominator).
using Rat = mpq_class;

enum class Rounding { HalfEven, HalfUp, Down, Up };

/// Parses "p/q", an integer, or a plain decimal ("0.25", "-3.125").
/// Decimals convert exactly. Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& text);

/// Canonical "p/q" form, e.g. "3/10", "-1/4", "5/1".
std::string rat_to_string(const Rat& value);

/// Significant-digit decomposition: value == sign * 0.<digits> * 10^exp10,
/// with exactly `sig` digits and digits[0] != '0' (unless value == 0).
struct SignificantDigits {
  std::string digits;
  int exp10 = 0;
  bool negative = false;
};

SignificantDigits significant_digits(const Rat& value, int sig,
                                     Rounding mode = Rounding::HalfEven);

/// Plain decimal rendering at `sig` significant digits, e.g. "0.0030030".
std::string format_decimal(const Rat& value, int sig,
                           Rounding mode = Rounding::HalfEven);

/// Decimal expansion with a fixed number of fraction digits, e.g. ("1/3", 4) -> "0.3333".
std::string format_fixed(const Rat& value, int fraction_digits,
                         Rounding mode = Rounding::HalfEven);

}  // namespace channelgame
