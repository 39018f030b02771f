#pragma once

#include <optional>

#include "dehnfill/cartan.hpp"
#include "dehnfill/sturm.hpp"

namespace dehnfill::family {

/// Coefficient functions of the one-parameter Cartan family, exact rational
/// functions of t on [t3, 1].
RationalFunction f();
RationalFunction h();
RationalFunction g(int p);     // p = 0..3
RationalFunction gbar(int p);  // 4 f / g_p

/// Derivative of f in the factored form
/// -2(t-1)(t+1)(t+2)^2(2t+1)^2(t^4+2t^3+21t^2+2t+1) /
/// ((t^2+t+1)^3 (t^2+7t+1)^3), built from its factors.
RationalFunction f_derivative_factored();

/// t3 = (11 + 9 sqrt2 - 3 sqrt(31 + 22 sqrt2)) / 2, the parameter with
/// f(t3) = 1/4 exactly.
const Tower& t_three();

/// Index labels (1',...,5',1,...,5) used by every downstream module.
std::vector<std::string> facet_labels();

/// The 10x10 family matrix at an exact point of [t3, 1].
CartanMatrix<Rational> cartan_at(const Rational& t);
CartanMatrix<Tower> cartan_at(const Tower& t);
/// ... and as a matrix of rational functions of t.
CartanMatrix<RationalFunction> cartan_symbolic();

/// A parameter value realizing the dihedral angle pi/p at the filling
/// ridges. Exact for p = 3; a certified rational enclosure otherwise.
struct SolvedPoint {
  int p = 0;
  std::optional<Tower> exact;           // present iff p == 3
  RationalInterval enclosure{0, 0};     // always encloses t_p
  std::optional<Rational> target;       // cos^2(pi/p) when rational
};
SolvedPoint solve_t_for_p(int p, const Rational& width);

/// Certificate that rank(C_t) = 5 for every t in [t3, 1]: generic rank 5
/// over the function field plus a 5x5 minor whose numerator has no root on
/// the interval (constant nonzero sign certified at both endpoints).
struct RankCertificate {
  bool holds = false;
  int generic_rank = 0;
  std::vector<int> minor_rows, minor_cols;
  RationalFunction minor;
  Polynomial minor_numerator;
  int numerator_root_count = -1;
  RationalInterval super{0, 0};
  int sign_at_t3 = 0;
  int sign_at_one = 0;
  int ranks_checked_at_samples = 0;
};
RankCertificate verify_rank_lemma();

/// Certificate that f is strictly increasing on [t3, 1): the symbolic
/// derivative matches the factored form, and every factor carries a sign
/// certificate on the interval; f(t3) = 1/4 and f(1) = 1 exactly.
struct MonotoneCertificate {
  bool holds = false;
  bool identity_holds = false;
  std::vector<std::pair<std::string, bool>> factor_checks;
  bool f_at_t3_is_quarter = false;
  bool f_at_one_is_one = false;
};
MonotoneCertificate verify_monotone_f();

/// Certificate that f, h, g_p, gbar_p are well-defined and positive on
/// [t3, 1] (numerator times denominator positive there).
struct PositiveCoefficientsCertificate {
  bool holds = false;
  std::vector<std::pair<std::string, bool>> checks;
};
PositiveCoefficientsCertificate verify_positive_coefficients();

/// Certificate that h > 2 on [t3, 1]; the matched-pair entry products
/// 2 h(t) then exceed 4, the infinite-label threshold.
PositivityCertificate verify_h_exceeds_two();

/// alpha (filling-ridge angle), theta = 6 alpha (cone angle), m with
/// theta = 2 pi / m and p = 3 m, as exact multiples of pi.
struct AngleDictionary {
  Rational alpha_over_pi;  // alpha = (this) * pi
  Rational theta_over_pi;  // theta = 6 * alpha
  std::optional<long> m;
  std::optional<long> p;
};
AngleDictionary angle_dictionary(std::optional<Rational> alpha_over_pi,
                                 std::optional<Rational> theta_over_pi,
                                 std::optional<long> m,
                                 std::optional<long> p);

/// The order-5 symmetry (i' -> (i+1)', i -> i+1, indices cyclic).
std::vector<int> order_five_permutation();

}  // namespace dehnfill::family
