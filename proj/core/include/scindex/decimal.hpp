#pragma once

// Decimal rendering of exact values. Rounding is round-half-to-even and is
// performed on the exact rational, so no binary floating point is involved.

#include "scindex/rational.hpp"

#include <string>

namespace scindex {

/// Fixed-point text with exactly `places` digits after the point
/// (no point when places == 0). Negative places are treated as 0.
[[nodiscard]] std::string format_fixed(const Exact& value, int places);
[[nodiscard]] std::string format_fixed(const Rational& value, int places);

/// Like format_fixed, then strips trailing zeros and a dangling point.
[[nodiscard]] std::string format_trimmed(const Exact& value, int places);

/// Round half-even to `places` decimals and return the result as an exact value.
[[nodiscard]] Exact round_half_even(const Exact& value, int places);

[[nodiscard]] double to_double(const Exact& value);

}  // namespace scindex
