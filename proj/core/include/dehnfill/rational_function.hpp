#pragma once

#include <string>

#include "dehnfill/polynomial.hpp"

namespace dehnfill {

/// Rational function in t, stored with gcd(num, den) = 1 and monic
/// denominator, so equality is syntactic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long constant) : num_(constant), den_(1) {}
  RationalFunction(Rational constant) : num_(std::move(constant)), den_(1) {}
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction t() { return RationalFunction(Polynomial::t()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  RationalFunction derivative() const;
  RationalFunction pow(unsigned e) const;

  /// Exact value at a point of any field containing the rationals.
  /// Throws DomainError at a pole.
  template <class K>
  K eval(const K& x) const {
    K d = den_.eval<K>(x);
    if (d == K(0)) throw DomainError("pole of rational function");
    return num_.eval<K>(x) / d;
  }
  Rational eval(const Rational& x) const { return eval<Rational>(x); }

  std::string to_string(const std::string& var = "t") const;

 private:
  Polynomial num_, den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

/// "[n0,n1,...]" or "[n0,...]/[d0,...]" with the denominator omitted when 1.
std::string serialize(const RationalFunction& f);
RationalFunction parse_rational_function(const std::string& text);

}  // namespace dehnfill
