#include "dehnfill/rational_function.hpp"

namespace dehnfill {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  Rational lead = den_.leading();
  num_ = num_ / lead;
  den_ = den_ / lead;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DomainError("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(
      num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction acc(1), base(*this);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::string serialize(const RationalFunction& f) {
  if (f.is_polynomial()) return serialize(f.num());
  return serialize(f.num()) + "/" + serialize(f.den());
}

RationalFunction parse_rational_function(const std::string& text) {
  size_t slash = text.find("]/[");
  if (slash == std::string::npos) return RationalFunction(parse_polynomial(text));
  return RationalFunction(parse_polynomial(text.substr(0, slash + 1)),
                          parse_polynomial(text.substr(slash + 2)));
}

}  // namespace dehnfill
