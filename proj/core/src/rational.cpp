#include "dehnfill/rational.hpp"

#include <cctype>

namespace dehnfill {

Rational rat(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' &&
        c != '/') {
      throw ParseError("bad character in rational literal: '" + text + "'");
    }
  }
  mpq_class r;
  if (r.set_str(text, 10) != 0) {
    throw ParseError("unparseable rational literal: '" + text + "'");
  }
  if (sgn(r.get_den()) == 0) {
    throw ParseError("zero denominator in rational literal: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_decimal_string(const Rational& x, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half away from zero
  mpq_class scaled = x * scale;
  mpz_class num = scaled.get_num(), den = scaled.get_den();
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;
  bool neg = q < 0;
  mpz_class a = abs(q);
  std::string body = a.get_str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, digits + 1 - body.size(), '0');
  }
  body.insert(body.size() - digits, ".");
  return (neg ? "-" : "") + body;
}

Rational pow(const Rational& base, unsigned exp) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), exp);
  return mpq_class(n) / mpq_class(d);
}

RationalInterval::RationalInterval(Rational l, Rational h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw DomainError("interval with lo > hi");
}

}  // namespace dehnfill
