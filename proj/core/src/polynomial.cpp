#include "dehnfill/polynomial.hpp"

#include <sstream>

namespace dehnfill {

void Polynomial::trim() {
  while (!c_.empty() && dehnfill::is_zero(c_.back())) c_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  Polynomial r(*this);
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

Polynomial Polynomial::operator/(const Rational& s) const {
  if (dehnfill::is_zero(s)) throw DomainError("polynomial division by zero scalar");
  Polynomial r(*this);
  for (auto& x : r.c_) x /= s;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc(1), base(*this);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this / leading();
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(
    const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  Polynomial r(*this);
  std::vector<Rational> q(
      degree() >= d.degree() ? degree() - d.degree() + 1 : 0, Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rational c = r.leading() / d.leading();
    q[k] = c;
    std::vector<Rational> shifted(k, Rational(0));
    shifted.insert(shifted.end(), d.c_.begin(), d.c_.end());
    r = r - Polynomial(std::move(shifted)) * c;
  }
  return {Polynomial(std::move(q)), r};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational c = coeff(i);
    if (dehnfill::is_zero(c)) continue;
    if (!first) os << (sign(c) > 0 ? " + " : " - ");
    else if (sign(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (i == 0 || a != 1) os << dehnfill::to_string(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = y;
    y = r.is_zero() ? r : r.monic();  // keeps coefficient growth in check
  }
  return x.is_zero() ? x : x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("square-free part of zero polynomial");
  if (p.degree() == 0) return Polynomial(1);
  Polynomial g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

std::string serialize(const Polynomial& p) {
  std::ostringstream os;
  os << "[";
  const auto& c = p.coeffs();
  if (c.empty()) {
    os << "0";
  } else {
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) os << ",";
      os << to_string(c[i]);
    }
  }
  os << "]";
  return os.str();
}

Polynomial parse_polynomial(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw ParseError("polynomial literal must be [c0,c1,...]: '" + text + "'");
  std::vector<Rational> coeffs;
  std::string body = text.substr(1, text.size() - 2);
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string item =
        body.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!item.empty()) coeffs.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace dehnfill
