#include "dehnfill/tower.hpp"

#include <sstream>
#include <vector>

namespace dehnfill {

QuadExt QuadExt::inverse() const {
  // (a + b s)(a - b s) = a^2 - 2 b^2, nonzero unless a = b = 0 since
  // sqrt(2) is irrational.
  Rational n = a * a - 2 * b * b;
  if (dehnfill::is_zero(n)) throw DomainError("inverse of zero in Q(sqrt2)");
  return QuadExt(a / n, -b / n);
}

std::string QuadExt::to_string() const {
  std::ostringstream os;
  os << dehnfill::to_string(a);
  if (!dehnfill::is_zero(b)) os << " + " << dehnfill::to_string(b) << "*sqrt2";
  return os.str();
}

int sign(const QuadExt& x) {
  const int sa = sign(x.a), sb = sign(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 2 b^2; equality impossible for nonzero
  // rationals since sqrt(2) is irrational
  const int cmp = sign(x.a * x.a - 2 * x.b * x.b);
  if (cmp == 0) throw DomainError("sqrt(2) would be rational");
  return sa * cmp;
}

const QuadExt& Tower::radicand() {
  static const QuadExt d(Rational(31), Rational(22));
  return d;
}

Rational Tower::as_rational() const {
  if (!is_rational()) throw DomainError("tower element is not rational");
  return u.a;
}

Tower Tower::inverse() const {
  // (u + v r)(u - v r) = u^2 - v^2 D in Q(sqrt2); nonzero unless u = v = 0
  // because D is not a square in Q(sqrt2).
  QuadExt n = u * u - v * v * radicand();
  if (n.is_zero()) throw DomainError("inverse of zero tower element");
  QuadExt ninv = n.inverse();
  return Tower(u * ninv, -(v * ninv));
}

std::string Tower::to_string() const {
  std::ostringstream os;
  os << u.to_string();
  if (!v.is_zero()) os << " + (" << v.to_string() << ")*sqrtD";
  return os.str();
}

int sign(const Tower& x) {
  const int su = sign(x.u), sv = sign(x.v);
  if (sv == 0) return su;
  if (su == 0) return sv;  // sqrt(D) > 0
  if (su == sv) return su;
  const QuadExt d = x.u * x.u - x.v * x.v * Tower::radicand();
  const int cmp = sign(d);
  if (cmp == 0) throw DomainError("sqrt(D) would lie in Q(sqrt2)");
  return su * cmp;
}

RationalInterval enclose(const Tower& x, const Rational& width) {
  if (sign(width) <= 0) throw DomainError("enclose needs width > 0");
  if (x.is_rational()) {
    Rational r = x.as_rational();
    return RationalInterval(r - width / 4, r + width / 4);
  }
  // crude strict bound: sqrt2 < 2, sqrtD < 9, sqrt2*sqrtD < 13
  Rational bound = abs(x.u.a) + 2 * abs(x.u.b) + 9 * abs(x.v.a) +
                   13 * abs(x.v.b) + 1;
  Rational lo = -bound, hi = bound;
  // bisect well past the requested width so the midpoint is a usable
  // approximation of x at the advertised precision
  Rational target = width / 256;
  while (hi - lo > target) {
    Rational mid = (lo + hi) / 2;
    int s = sign(x - Tower(mid));
    if (s > 0) {
      lo = mid;
    } else if (s < 0) {
      hi = mid;
    } else {
      // x == mid cannot happen: x is irrational here
      throw DomainError("irrational tower element equal to a rational");
    }
  }
  return RationalInterval(lo, hi);
}

std::string serialize(const Tower& x) {
  auto c = x.coordinates();
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    if (i) os << ",";
    os << to_string(c[i]);
  }
  return os.str();
}

Tower parse_tower(const std::string& text) {
  std::vector<Rational> parts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string item =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    parts.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 4)
    throw ParseError("tower literal needs 4 comma-separated rationals: '" +
                     text + "'");
  return Tower(QuadExt(parts[0], parts[1]), QuadExt(parts[2], parts[3]));
}

}  // namespace dehnfill
