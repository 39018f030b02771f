#pragma once

#include <variant>
#include <vector>

#include "dehnfill/polynomial.hpp"
#include "dehnfill/tower.hpp"

namespace dehnfill {

/// Sturm chain of the square-free part of p.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Exact number of distinct real roots of p in the open window.
/// Preconditions: p nonzero, neither endpoint a root of p.
int sturm_root_count(const Polynomial& p, const RationalInterval& window);

/// Endpoint of a positivity query: rational or tower.
using ScalarPoint = std::variant<Rational, Tower>;

int sign_at(const Polynomial& p, const ScalarPoint& x);

/// Witness for "p > 0 on [lo, hi]" (or on [lo, hi) for the half-open form).
struct PositivityCertificate {
  bool holds = false;
  int sign_lo = 0;              // exact sign of p at lo
  int sign_hi = 0;              // exact sign of p at hi (closed form only)
  RationalInterval super{0, 0}; // rational open superinterval searched
  int root_count = -1;          // Sturm count on the superinterval when holds
  int refinements = 0;
};

/// p > 0 everywhere on [lo, hi]. lo may be a tower element (enclosed by a
/// rational superinterval that is refined until its extra margin is
/// root-free). Sound both ways; throws UndecidedError when the refinement
/// budget runs out before either a proof or a disproof is found.
PositivityCertificate poly_positive_on(const Polynomial& p,
                                       const ScalarPoint& lo,
                                       const Rational& hi,
                                       int budget = 64);

/// p > 0 on [lo, hi): same scheme without the sign requirement at hi.
PositivityCertificate poly_positive_on_halfopen(const Polynomial& p,
                                                const ScalarPoint& lo,
                                                const Rational& hi,
                                                int budget = 64);

/// p has no root anywhere on [lo, hi] (so keeps one constant sign there).
/// Witness: nonzero endpoint signs plus a root-free open superinterval.
PositivityCertificate poly_nonvanishing_on(const Polynomial& p,
                                           const ScalarPoint& lo,
                                           const Rational& hi,
                                           int budget = 64);

}  // namespace dehnfill
