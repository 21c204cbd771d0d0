#pragma once

#include <string>

#include "autocomp/counting.hpp"

namespace autocomp {

// Exact nonnegative rational with normalized representation (gcd 1, den > 0).
struct Rational {
  Count num = 0;
  Count den = 1;

  static Rational make(Count n, Count d);

  bool operator==(const Rational&) const = default;
};

// Exact cross-multiplied comparison.
int compare(const Rational& a, const Rational& b);
inline bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }

// "num/den"
std::string to_fraction_string(const Rational& r);

// Decimal expansion with `places` digits after the point, rounded half-up.
std::string to_decimal_string(const Rational& r, int places);

// Parses "0.1", "57/64", "3" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace autocomp
