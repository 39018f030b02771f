#pragma once

#include <array>
#include <string>

#include "dehnfill/rational.hpp"

namespace dehnfill {

/// Element of Q(sqrt(2)): a + b*sqrt(2).
struct QuadExt {
  Rational a;
  Rational b;

  QuadExt() : a(0), b(0) {}
  QuadExt(long x) : a(x), b(0) {}
  QuadExt(Rational x) : a(std::move(x)), b(0) {}
  QuadExt(Rational x, Rational y) : a(std::move(x)), b(std::move(y)) {}

  static QuadExt sqrt2() { return QuadExt(Rational(0), Rational(1)); }

  bool is_zero() const { return dehnfill::is_zero(a) && dehnfill::is_zero(b); }
  bool is_rational() const { return dehnfill::is_zero(b); }

  QuadExt operator-() const { return QuadExt(-a, -b); }
  QuadExt operator+(const QuadExt& o) const { return QuadExt(a + o.a, b + o.b); }
  QuadExt operator-(const QuadExt& o) const { return QuadExt(a - o.a, b - o.b); }
  QuadExt operator*(const QuadExt& o) const {
    return QuadExt(a * o.a + 2 * b * o.b, a * o.b + b * o.a);
  }
  QuadExt inverse() const;
  QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }
  bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }

  std::string to_string() const;
};

/// Exact sign; radical elimination with case analysis, every answer a proof.
int sign(const QuadExt& x);
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

/// Element of the two-level tower Q(sqrt(2))(sqrt(D)) with D = 31 + 22*sqrt(2):
/// u + v*sqrt(D), u and v in Q(sqrt(2)). Coordinates against the basis
/// (1, sqrt(2), sqrt(D), sqrt(2)*sqrt(D)) are (u.a, u.b, v.a, v.b).
struct Tower {
  QuadExt u;
  QuadExt v;

  Tower() = default;
  Tower(long x) : u(x), v() {}
  Tower(Rational x) : u(std::move(x)), v() {}
  Tower(QuadExt uu) : u(std::move(uu)), v() {}
  Tower(QuadExt uu, QuadExt vv) : u(std::move(uu)), v(std::move(vv)) {}

  /// D = 31 + 22*sqrt(2), the level-two radicand.
  static const QuadExt& radicand();
  static Tower sqrt2() { return Tower(QuadExt::sqrt2()); }
  static Tower sqrtD() { return Tower(QuadExt(0), QuadExt(1)); }

  bool is_zero() const { return u.is_zero() && v.is_zero(); }
  bool is_rational() const { return u.is_rational() && v.is_zero(); }
  Rational as_rational() const;
  std::array<Rational, 4> coordinates() const { return {u.a, u.b, v.a, v.b}; }

  Tower operator-() const { return Tower(-u, -v); }
  Tower operator+(const Tower& o) const { return Tower(u + o.u, v + o.v); }
  Tower operator-(const Tower& o) const { return Tower(u - o.u, v - o.v); }
  Tower operator*(const Tower& o) const {
    return Tower(u * o.u + v * o.v * radicand(), u * o.v + v * o.u);
  }
  Tower inverse() const;
  Tower operator/(const Tower& o) const { return *this * o.inverse(); }
  bool operator==(const Tower& o) const { return u == o.u && v == o.v; }

  std::string to_string() const;
};

int sign(const Tower& x);
inline bool is_zero(const Tower& x) { return x.is_zero(); }

inline bool operator<(const Tower& x, const Tower& y) { return sign(x - y) < 0; }
inline bool operator>(const Tower& x, const Tower& y) { return sign(x - y) > 0; }
inline bool operator<=(const Tower& x, const Tower& y) { return sign(x - y) <= 0; }
inline bool operator>=(const Tower& x, const Tower& y) { return sign(x - y) >= 0; }

/// Rational lo < x < hi with hi - lo <= width, found by bisection against
/// exact sign tests.
RationalInterval enclose(const Tower& x, const Rational& width);

/// "a,b,c,d" in the fixed basis order (1, sqrt2, sqrtD, sqrt2*sqrtD).
std::string serialize(const Tower& x);
Tower parse_tower(const std::string& text);

}  // namespace dehnfill
