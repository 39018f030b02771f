#pragma once

#include <gmpxx.h>

#include <string>

#include "dehnfill/errors.hpp"

namespace dehnfill {

/// Arbitrary-precision rational. GMP keeps the canonical form the library
/// relies on: lowest terms, denominator > 0.
using Rational = mpq_class;

inline int sign(const Rational& x) { return sgn(x); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

Rational rat(long num, long den = 1);

/// Parse "p/q" (or "p"). Rejects zero denominators and junk.
Rational parse_rational(const std::string& text);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& x);

/// Decimal rendering for reports, correctly rounded to `digits` fractional
/// digits. Display only; never used in any certificate.
std::string to_decimal_string(const Rational& x, int digits = 12);

Rational pow(const Rational& base, unsigned exp);

/// Closed interval with rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval(Rational l, Rational h);

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool strictly_contains(const Rational& x) const { return lo < x && x < hi; }
  /// this inside (other.lo, other.hi)
  bool inside(const RationalInterval& other) const {
    return other.lo < lo && hi < other.hi;
  }
};

}  // namespace dehnfill
