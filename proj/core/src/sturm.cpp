#include "dehnfill/sturm.hpp"

namespace dehnfill {

namespace {

int variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// p square-free, endpoints not roots of p
int count_open_squarefree(const Polynomial& p, const Rational& lo,
                          const Rational& hi) {
  if (lo >= hi) return 0;
  std::vector<Polynomial> chain;
  chain.push_back(p);
  Polynomial d = p.derivative();
  if (!d.is_zero()) chain.push_back(d.monic());
  while (chain.size() >= 2 && chain.back().degree() > 0) {
    Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    // scaling by a positive rational keeps all sign data intact
    chain.push_back(-(r / abs(r.leading())));
  }
  return variations(chain, lo) - variations(chain, hi);
}

// distinct roots of p strictly inside (lo, hi); roots at the endpoints are
// deflated away first, which is sound because they are outside the open
// window
int count_open(const Polynomial& p, const Rational& lo, const Rational& hi) {
  Polynomial q = squarefree_part(p);
  for (const Rational* e : {&lo, &hi}) {
    while (!q.is_zero() && q.degree() > 0 && is_zero(q.eval(*e))) {
      q = q.divmod(Polynomial({-*e, Rational(1)})).first;
    }
  }
  if (q.degree() <= 0) return 0;
  return count_open_squarefree(q, lo, hi);
}

}  // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of zero polynomial");
  std::vector<Polynomial> chain;
  chain.push_back(squarefree_part(p));
  Polynomial d = chain[0].derivative();
  if (!d.is_zero()) chain.push_back(d.monic());
  while (chain.size() >= 2 && chain.back().degree() > 0) {
    Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-(r / abs(r.leading())));
  }
  return chain;
}

int sturm_root_count(const Polynomial& p, const RationalInterval& window) {
  if (p.is_zero()) throw DomainError("root count of zero polynomial");
  if (is_zero(p.eval(window.lo)) || is_zero(p.eval(window.hi))) {
    throw DomainError(
        "window endpoint is a root; perturb the endpoint rationally");
  }
  if (p.degree() == 0 || window.lo == window.hi) return 0;
  return count_open_squarefree(squarefree_part(p), window.lo, window.hi);
}

int sign_at(const Polynomial& p, const ScalarPoint& x) {
  if (const Rational* r = std::get_if<Rational>(&x)) return sign(p.eval(*r));
  return sign(p.eval<Tower>(std::get<Tower>(x)));
}

namespace {

bool point_below(const ScalarPoint& lo, const Rational& hi) {
  if (const Rational* r = std::get_if<Rational>(&lo)) return *r < hi;
  return sign(Tower(hi) - std::get<Tower>(lo)) > 0;
}

PositivityCertificate positive_rational_lo(const Polynomial& p,
                                           const Rational& lo,
                                           const Rational& hi) {
  PositivityCertificate cert;
  cert.sign_lo = sign(p.eval(lo));
  cert.super = RationalInterval(lo, hi);
  if (cert.sign_lo <= 0) return cert;
  cert.root_count = count_open(p, lo, hi);
  cert.holds = (cert.root_count == 0);
  return cert;
}

}  // namespace

PositivityCertificate poly_positive_on_halfopen(const Polynomial& p,
                                                const ScalarPoint& lo,
                                                const Rational& hi,
                                                int budget) {
  if (p.is_zero()) throw DomainError("positivity of zero polynomial");
  if (!point_below(lo, hi)) throw DomainError("positivity needs lo < hi");

  if (const Rational* r = std::get_if<Rational>(&lo)) {
    return positive_rational_lo(p, *r, hi);
  }
  const Tower& tlo = std::get<Tower>(lo);
  if (tlo.is_rational()) return positive_rational_lo(p, tlo.as_rational(), hi);

  PositivityCertificate cert;
  cert.sign_lo = sign(p.eval<Tower>(tlo));
  if (cert.sign_lo <= 0) return cert;

  Rational width = enclose(tlo, Rational(1)).width() / 2;
  for (int r = 0; r <= budget; ++r, width /= 2, ++cert.refinements) {
    RationalInterval enc = enclose(tlo, width);
    if (enc.hi >= hi) continue;
    int outer = count_open(p, enc.lo, hi);
    if (outer == 0) {
      cert.holds = true;
      cert.super = RationalInterval(enc.lo, hi);
      cert.root_count = 0;
      return cert;
    }
    // a root strictly inside (lo, hi) disproves positivity; one in the
    // margin (enc.lo, enc.hi] merely asks for a tighter enclosure
    int inner = count_open(p, enc.hi, hi);
    if (inner > 0) {
      cert.holds = false;
      cert.super = RationalInterval(enc.hi, hi);
      cert.root_count = inner;
      return cert;
    }
  }
  throw UndecidedError("positivity refinement budget exhausted");
}

PositivityCertificate poly_nonvanishing_on(const Polynomial& p,
                                           const ScalarPoint& lo,
                                           const Rational& hi, int budget) {
  if (p.is_zero()) throw DomainError("nonvanishing of zero polynomial");
  PositivityCertificate cert;
  cert.sign_lo = sign_at(p, lo);
  cert.sign_hi = sign(p.eval(hi));
  cert.super = RationalInterval(hi, hi);
  if (cert.sign_lo == 0 || cert.sign_hi == 0) return cert;

  const Rational* rlo = std::get_if<Rational>(&lo);
  Rational rlo_value;
  if (!rlo && std::get<Tower>(lo).is_rational()) {
    rlo_value = std::get<Tower>(lo).as_rational();
    rlo = &rlo_value;
  }
  if (rlo) {
    if (!(*rlo < hi)) throw DomainError("nonvanishing needs lo < hi");
    cert.root_count = count_open(p, *rlo, hi);
    cert.super = RationalInterval(*rlo, hi);
    cert.holds = (cert.root_count == 0);
    return cert;
  }
  const Tower& tlo = std::get<Tower>(lo);
  if (!point_below(lo, hi)) throw DomainError("nonvanishing needs lo < hi");
  Rational width = enclose(tlo, Rational(1)).width() / 2;
  for (int r = 0; r <= budget; ++r, width /= 2, ++cert.refinements) {
    RationalInterval enc = enclose(tlo, width);
    if (enc.hi >= hi) continue;
    int outer = count_open(p, enc.lo, hi);
    if (outer == 0) {
      cert.holds = true;
      cert.super = RationalInterval(enc.lo, hi);
      cert.root_count = 0;
      return cert;
    }
    int inner = count_open(p, enc.hi, hi);
    if (inner > 0) {
      cert.holds = false;
      cert.super = RationalInterval(enc.hi, hi);
      cert.root_count = inner;
      return cert;
    }
  }
  throw UndecidedError("nonvanishing refinement budget exhausted");
}

PositivityCertificate poly_positive_on(const Polynomial& p,
                                       const ScalarPoint& lo,
                                       const Rational& hi, int budget) {
  if (p.is_zero()) throw DomainError("positivity of zero polynomial");
  int sign_hi = sign(p.eval(hi));
  if (sign_hi <= 0) {
    PositivityCertificate cert;
    cert.sign_lo = sign_at(p, lo);
    cert.sign_hi = sign_hi;
    cert.super = RationalInterval(hi, hi);
    return cert;
  }
  PositivityCertificate cert = poly_positive_on_halfopen(p, lo, hi, budget);
  cert.sign_hi = sign_hi;
  return cert;
}

}  // namespace dehnfill
