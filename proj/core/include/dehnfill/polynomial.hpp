#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dehnfill/rational.hpp"

namespace dehnfill {

/// Univariate polynomial in t over the rationals, dense ascending
/// coefficients, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long constant) : c_{Rational(constant)} { trim(); }
  Polynomial(Rational constant) : c_{std::move(constant)} { trim(); }
  explicit Polynomial(std::vector<Rational> ascending)
      : c_(std::move(ascending)) {
    trim();
  }
  Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) {
    trim();
  }

  static Polynomial t() { return Polynomial({Rational(0), Rational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const;
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  const std::vector<Rational>& coeffs() const { return c_; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& s) const;
  Polynomial operator/(const Rational& s) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  Polynomial pow(unsigned e) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  /// Quotient and remainder; exact over the rationals.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  /// Horner evaluation over any field containing the rationals.
  template <class K>
  K eval(const K& x) const {
    K acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x + K(*it);
    }
    return acc;
  }
  Rational eval(const Rational& x) const { return eval<Rational>(x); }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) {
  return p * s;
}

/// Monic gcd; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made monic. Same real roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// "[c0,c1,...]" low-to-high, entries in the rational text form.
std::string serialize(const Polynomial& p);
Polynomial parse_polynomial(const std::string& text);

}  // namespace dehnfill
