#include <doctest.h>

#include <random>

#include "dehnfill/family.hpp"
#include "dehnfill/sturm.hpp"
#include "dehnfill/tower.hpp"
#include "oracles.hpp"

using namespace dehnfill;

TEST_CASE("rational parsing and text form") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(rat(7)) == "7");
  CHECK(parse_rational("0/5") == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK(to_decimal_string(rat(1, 3), 6) == "0.333333");
  CHECK(to_decimal_string(rat(-1, 2), 3) == "-0.500");
  CHECK(to_decimal_string(rat(1, 4), 2) == "0.25");
}

TEST_CASE("polynomial arithmetic and division") {
  Polynomial t = Polynomial::t();
  Polynomial p = t * t - Polynomial(2);  // t^2 - 2
  CHECK(p.degree() == 2);
  CHECK(p.eval(rat(3)) == 7);
  auto [q, r] = (p * p).divmod(p);
  CHECK(q == p);
  CHECK(r.is_zero());
  Polynomial g1 = gcd(p * (t - Polynomial(1)), p * (t + Polynomial(5)));
  CHECK(g1 == p.monic());
  CHECK(squarefree_part(p.pow(3)) == p.monic());
  CHECK(serialize(parse_polynomial("[1,0,2]")) == "[1,0,2]");
  CHECK(parse_polynomial("[0]").is_zero());
}

TEST_CASE("rational function normal form") {
  Polynomial t = Polynomial::t();
  // (t^2-1)/(2t-2) reduces to (t+1)/2 with monic denominator
  RationalFunction f(t * t - Polynomial(1), Polynomial(2) * t - Polynomial(2));
  CHECK(f.den() == Polynomial(1));
  CHECK(f == RationalFunction((t + Polynomial(1)) * rat(1, 2)));
  RationalFunction g = RationalFunction(Polynomial(1), t) +
                       RationalFunction(Polynomial(1), t);  // 2/t -> den monic
  CHECK(g.den() == t);
  CHECK(g.num() == Polynomial(2));
  CHECK_THROWS_AS(g.eval(Rational(0)), DomainError);
}

TEST_CASE("tower arithmetic agrees with rationals on level-zero elements") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  for (int i = 0; i < 200; ++i) {
    Rational a = rat(num(rng), den(rng));
    Rational b = rat(num(rng), den(rng));
    Tower ta(a), tb(b);
    CHECK((ta + tb).as_rational() == a + b);
    CHECK((ta - tb).as_rational() == a - b);
    CHECK((ta * tb).as_rational() == a * b);
    if (!is_zero(b)) CHECK((ta / tb).as_rational() == a / b);
  }
}

TEST_CASE("tower field structure and signs") {
  Tower s2 = Tower::sqrt2();
  CHECK(s2 * s2 == Tower(2));
  Tower sd = Tower::sqrtD();
  CHECK(sd * sd == Tower(QuadExt(Rational(31), Rational(22))));
  Tower x(QuadExt(rat(1), rat(-2)), QuadExt(rat(3), rat(1, 7)));
  CHECK(x * x.inverse() == Tower(1));
  CHECK(sign(Tower(0)) == 0);
  CHECK(sign(s2 - Tower(1)) > 0);
  CHECK(sign(s2 - Tower(rat(3, 2))) < 0);

  const Tower& t3 = family::t_three();
  CHECK(sign(t3) > 0);

  // independent integer-sqrt oracle places t3 below 1/20
  auto [lo, hi] = oracles::t3_bounds(30);
  CHECK(hi < rat(1, 20));
  CHECK(sign(t3 - Tower(rat(1, 20))) < 0);
  CHECK(lo > 0);
}

TEST_CASE("enclose brackets tower elements") {
  const Tower& t3 = family::t_three();
  RationalInterval e = enclose(t3, rat(1, 10000));
  CHECK(e.width() <= rat(1, 10000));
  CHECK(e.lo > rat(421, 10000));
  CHECK(e.hi < rat(423, 10000));
  // against the independent oracle bounds
  auto [lo, hi] = oracles::t3_bounds(30);
  CHECK(e.lo < hi);
  CHECK(e.hi > lo);

  RationalInterval s2 = enclose(Tower::sqrt2(), rat(1, 1000));
  CHECK(s2.lo > rat(14142, 10000));
  CHECK(s2.hi < rat(14143, 10000));

  RationalInterval wide = enclose(t3, Rational(1));
  CHECK(wide.width() <= 1);
  CHECK(wide.lo < wide.hi);

  // nested enclosures are consistent for arbitrary width pairs
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(1, 1 << 20);
  for (int i = 0; i < 25; ++i) {
    RationalInterval a = enclose(t3, rat(1, d(rng)));
    RationalInterval b = enclose(t3, rat(1, d(rng)));
    CHECK(a.lo < b.hi);
  }
  CHECK_THROWS_AS(enclose(t3, Rational(0)), DomainError);
}

TEST_CASE("tower serialization round trip") {
  const Tower& t3 = family::t_three();
  CHECK(serialize(t3) == "11/2,9/2,-3/2,0");
  CHECK(parse_tower(serialize(t3)) == t3);
}

TEST_CASE("sturm root counts") {
  Polynomial t = Polynomial::t();
  Polynomial p = t * t - Polynomial(2);
  CHECK(sturm_root_count(p, RationalInterval(0, 2)) == 1);
  CHECK(sturm_root_count(t * t + Polynomial(1), RationalInterval(-10, 10)) ==
        0);
  CHECK_THROWS_AS(sturm_root_count(Polynomial(), RationalInterval(0, 1)),
                  DomainError);
  CHECK_THROWS_AS(sturm_root_count(t, RationalInterval(0, 1)), DomainError);

  // numerator of f - 1/4 has a single root in (0, 1); the grid oracle sees
  // exactly one sign change
  RationalFunction fm = family::f() - RationalFunction(rat(1, 4));
  CHECK(oracles::grid_sign_changes(fm.num(), Rational(0), Rational(1)) == 1);
  CHECK(sturm_root_count(fm.num(), RationalInterval(0, 1)) == 1);
}

TEST_CASE("sturm additivity over coprime factors") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> c(-6, 6);
  RationalInterval window(-4, 4);
  int tried = 0;
  for (int iter = 0; iter < 300 && tried < 60; ++iter) {
    auto random_poly = [&] {
      std::vector<Rational> v;
      int deg = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i <= deg; ++i) v.push_back(Rational(c(rng)));
      return Polynomial(v);
    };
    Polynomial p = random_poly(), q = random_poly();
    if (p.is_zero() || q.is_zero()) continue;
    if (gcd(p, q).degree() > 0) continue;  // shared roots break additivity
    Polynomial pq = p * q;
    if (is_zero(p.eval(window.lo)) || is_zero(p.eval(window.hi))) continue;
    if (is_zero(q.eval(window.lo)) || is_zero(q.eval(window.hi))) continue;
    ++tried;
    CHECK(sturm_root_count(pq, window) ==
          sturm_root_count(p, window) + sturm_root_count(q, window));
  }
  CHECK(tried >= 40);
}

TEST_CASE("certified positivity on intervals") {
  const ScalarPoint t3(family::t_three());
  Polynomial t = Polynomial::t();

  CHECK(poly_positive_on(t, t3, Rational(1)).holds);
  CHECK_FALSE(poly_positive_on(t - Polynomial(1), t3, Rational(1)).holds);

  // structured check for h > 0 on [t3, 1]
  RationalFunction h = family::h();
  CHECK(poly_positive_on(h.num() * h.den(), t3, Rational(1)).holds);

  // disproof with an interior root: (t - 1/2) vanishes inside
  Polynomial mid = t - Polynomial(rat(1, 2));
  CHECK_FALSE(poly_positive_on(mid * mid, t3, Rational(1)).holds);

  // half-open form accepts a vanishing right endpoint
  Polynomial one_minus_t = Polynomial(1) - t;
  CHECK(poly_positive_on_halfopen(one_minus_t, t3, Rational(1)).holds);
  CHECK_FALSE(poly_positive_on(one_minus_t, t3, Rational(1)).holds);
}

TEST_CASE("rational function evaluation") {
  RationalFunction f = family::f();
  CHECK(f.eval(Rational(1)) == 1);
  // substitution oracle: plug 1/2 into the defining product directly
  Rational tt = rat(1, 2);
  Rational byhand = tt * pow(tt + 2, 3) * pow(2 * tt + 1, 3) /
                    (pow(tt * tt + tt + 1, 2) * pow(tt * tt + 7 * tt + 1, 2));
  CHECK(byhand == rat(16000, 17689));
  CHECK(f.eval(tt) == rat(16000, 17689));
  CHECK(f.eval<Tower>(family::t_three()) == Tower(rat(1, 4)));
}

TEST_CASE("g_p gbar_p product identity") {
  for (int p = 0; p < 4; ++p) {
    CHECK(family::g(p) * family::gbar(p) ==
          RationalFunction(4) * family::f());
  }
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 40);
  for (int i = 0; i < 30; ++i) {
    Rational x = rat(num(rng), 40);  // random rational in (0, 1]
    for (int p = 0; p < 4; ++p) {
      CHECK(family::g(p).eval(x) * family::gbar(p).eval(x) ==
            4 * family::f().eval(x));
    }
  }
}
