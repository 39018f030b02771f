#include <doctest.h>

#include <random>
#include <sstream>

#include "dehnfill/cartan.hpp"
#include "dehnfill/family.hpp"

using namespace dehnfill;

namespace {

CartanMatrix<Rational> from_rows(const std::vector<std::vector<long>>& rows) {
  int n = static_cast<int>(rows.size());
  Mat<Rational> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(rows[i][j]);
  return CartanMatrix<Rational>(std::move(m));
}

// Perron eigenvalue bracket for N = 2I - A via power iteration on N + I
// (always primitive for a connected pattern), Collatz-Wielandt bounds.
std::pair<double, double> perron_bracket(const CartanMatrix<Rational>& a) {
  const int n = a.size();
  std::vector<std::vector<double>> nmat(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) nmat[i][j] = -a.entries(i, j).get_d();
  std::vector<double> v(n, 1.0), w(n);
  double lo = 0, hi = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    for (int i = 0; i < n; ++i) {
      w[i] = v[i];
      for (int j = 0; j < n; ++j) w[i] += nmat[i][j] * v[j];
    }
    lo = 1e300;
    hi = -1e300;
    double norm = 0;
    for (int i = 0; i < n; ++i) {
      double ratio = w[i] / v[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      norm = std::max(norm, w[i]);
    }
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
    if (hi - lo < 1e-12) break;
  }
  return {lo - 1.0, hi - 1.0};
}

std::mt19937_64 rng(424242);

CartanMatrix<Rational> random_irreducible_cartan(int n) {
  std::uniform_int_distribution<long> num(1, 24), den(1, 8), extra(0, 99);
  Mat<Rational> m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 2;
  auto connect = [&](int i, int j) {
    m(i, j) = -rat(num(rng), den(rng));
    m(j, i) = -rat(num(rng), den(rng));
  };
  for (int i = 1; i < n; ++i) {
    connect(static_cast<int>(rng() % i), i);  // random spanning tree
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (is_zero(m(i, j)) && extra(rng) < 35) connect(i, j);
  return CartanMatrix<Rational>(std::move(m));
}

std::vector<Rational> random_positive_diagonal(int n) {
  std::uniform_int_distribution<long> num(1, 12), den(1, 12);
  std::vector<Rational> d;
  for (int i = 0; i < n; ++i) d.push_back(rat(num(rng), den(rng)));
  return d;
}

CartanMatrix<Rational> conjugate_by_diagonal(const CartanMatrix<Rational>& a,
                                             const std::vector<Rational>& d) {
  const int n = a.size();
  Mat<Rational> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = d[i] * a.entries(i, j) / d[j];
  return CartanMatrix<Rational>(std::move(m));
}

}  // namespace

TEST_CASE("components of the nonzero pattern") {
  CHECK(components(from_rows({{2, 0}, {0, 2}})).size() == 2);
  auto c1 = family::cartan_at(Rational(1));
  auto comps = components(c1);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].size() == 10);
  // A2 + A2 block diagonal
  auto blocks = from_rows(
      {{2, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, -1}, {0, 0, -1, 2}});
  CHECK(components(blocks).size() == 2);
}

TEST_CASE("classification trichotomy on the pinned examples") {
  auto pos = classify(from_rows({{2, -1}, {-1, 2}}));
  CHECK(pos.type == CartanType::Positive);
  REQUIRE(pos.leading_minors.size() == 2);
  CHECK(pos.leading_minors[0] == 2);
  CHECK(pos.leading_minors[1] == 3);

  auto zero = classify(from_rows({{2, -2}, {-2, 2}}));
  CHECK(zero.type == CartanType::Zero);
  CHECK(zero.rank == 1);
  REQUIRE(zero.kernel.has_value());
  for (const auto& k : *zero.kernel) CHECK(sign(k) > 0);

  auto neg = classify(family::cartan_at(family::t_three()));
  CHECK(neg.type == CartanType::Negative);
  CHECK(neg.rank == 5);

  CHECK_THROWS_AS(classify(from_rows({{2, 0}, {0, 2}})), DomainError);
}

TEST_CASE("rank over points and over the function field") {
  CHECK(rank(family::cartan_symbolic()) == 5);
  CHECK(rank(family::cartan_at(Rational(1))) == 5);
  CHECK(rank(from_rows({{2, 0}, {0, 2}})) == 2);
}

TEST_CASE("diagonal equivalence") {
  auto a = from_rows({{2, -1}, {-1, 2}});
  auto self = equivalent(a, a);
  REQUIRE(self.has_value());
  for (const auto& d : *self) CHECK(d == 1);

  CHECK_FALSE(equivalent(a, from_rows({{2, -2}, {-2, 2}})).has_value());

  auto ct = family::cartan_at(rat(1, 2));
  auto conj = permutation_conjugate(ct, family::order_five_permutation());
  auto witness = equivalent(conj, ct);
  REQUIRE(witness.has_value());
  for (const auto& d : *witness) CHECK(sign(d) > 0);
}

TEST_CASE("symmetrization of the family matrix at t = 1") {
  auto c1 = family::cartan_at(Rational(1));
  auto sym = symmetrize(c1);
  REQUIRE(sym.has_value());
  const auto& [s, delta] = *sym;
  for (int i = 0; i < 5; ++i) {
    CHECK(delta[i] == rat(1, 3));        // primed block
    CHECK(delta[5 + i] == Rational(1));  // unprimed block
    CHECK(s(i, i) == 6);
    CHECK(s(5 + i, 5 + i) == 2);
    CHECK(s(i, 5 + i) == -6);
    for (int j = 0; j < 5; ++j) {
      if (i == j) continue;
      CHECK(s(i, j) == -6);
      CHECK(s(5 + i, 5 + j) == -1);
    }
  }
  // any symmetric Cartan matrix symmetrizes to itself
  auto a2 = from_rows({{2, -1}, {-1, 2}});
  auto trivial = symmetrize(a2);
  REQUIRE(trivial.has_value());
  CHECK(trivial->first == a2.entries);
  CHECK(trivial->second == std::vector<Rational>{1, 1});

  // a 3-cycle with asymmetric products is not symmetrizable
  auto bad = from_rows({{2, -1, -1}, {-1, 2, -1}, {-2, -1, 2}});
  CHECK_FALSE(symmetrize(bad).has_value());
}

TEST_CASE("exact inertia") {
  auto c1 = family::cartan_at(Rational(1));
  auto sym = symmetrize(c1);
  REQUIRE(sym.has_value());
  Inertia in = signature(sym->first);
  CHECK(in.positive == 4);
  CHECK(in.negative == 1);
  CHECK(in.zero == 5);

  Inertia id3 = signature(Mat<Rational>::identity(3));
  CHECK(id3.positive == 3);
  CHECK(id3.negative == 0);
  CHECK(id3.zero == 0);

  Mat<Rational> d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = -1;
  Inertia mix = signature(d);
  CHECK(mix.positive == 1);
  CHECK(mix.negative == 1);
  CHECK(mix.zero == 1);

  // hyperbolic pair needs the 2x2 block step
  Mat<Rational> hyp(2, 2);
  hyp(0, 1) = 1;
  hyp(1, 0) = 1;
  Inertia h = signature(hyp);
  CHECK(h.positive == 1);
  CHECK(h.negative == 1);
}

TEST_CASE("trichotomy agrees with the Perron float oracle") {
  std::uniform_int_distribution<int> size(2, 6);
  int boundary_skips = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    auto a = random_irreducible_cartan(size(rng));
    auto verdict = classify(a);
    auto [lo, hi] = perron_bracket(a);
    double width = hi - lo;
    if (std::abs(0.5 * (lo + hi) - 2.0) <= 1e-9 + width) {
      ++boundary_skips;  // exact verdict wins near the boundary
      continue;
    }
    if (hi < 2.0) {
      CHECK(verdict.type == CartanType::Positive);
    } else if (lo > 2.0) {
      CHECK(verdict.type == CartanType::Negative);
    }
  }
  CHECK(boundary_skips < 100);
}

TEST_CASE("classification and rank are diagonal-conjugation invariants") {
  std::uniform_int_distribution<int> size(2, 6);
  for (int iter = 0; iter < 60; ++iter) {
    auto a = random_irreducible_cartan(size(rng));
    auto d = random_positive_diagonal(a.size());
    auto b = conjugate_by_diagonal(a, d);
    CHECK(classify(a).type == classify(b).type);
    CHECK(rank(a) == rank(b));
    REQUIRE(equivalent(a, b).has_value());
  }
}

TEST_CASE("equivalence is an equivalence relation") {
  std::uniform_int_distribution<int> size(2, 5);
  for (int iter = 0; iter < 40; ++iter) {
    auto a = random_irreducible_cartan(size(rng));
    auto b = conjugate_by_diagonal(a, random_positive_diagonal(a.size()));
    auto c = conjugate_by_diagonal(b, random_positive_diagonal(a.size()));
    CHECK(equivalent(a, a).has_value());
    CHECK(equivalent(a, b).has_value());
    CHECK(equivalent(b, a).has_value());
    CHECK(equivalent(b, c).has_value());
    CHECK(equivalent(a, c).has_value());
  }
  // and unrelated matrices stay unrelated both ways
  auto a = from_rows({{2, -1}, {-1, 2}});
  auto z = from_rows({{2, -2}, {-2, 2}});
  CHECK_FALSE(equivalent(a, z).has_value());
  CHECK_FALSE(equivalent(z, a).has_value());
}

TEST_CASE("signature components sum to the matrix size and rank") {
  std::uniform_int_distribution<int> size(2, 6);
  for (int iter = 0; iter < 40; ++iter) {
    auto a = random_irreducible_cartan(size(rng));
    auto sym = symmetrize(a);
    if (!sym.has_value()) continue;
    Inertia in = signature(sym->first);
    CHECK(in.positive + in.negative + in.zero == a.size());
    CHECK(in.positive + in.negative == rank(sym->first));
  }
}

TEST_CASE("matrix documents round trip") {
  auto c1 = family::cartan_at(Rational(1));
  std::stringstream buf;
  write_cartan_document(buf, make_cartan_document(c1));
  auto doc = read_cartan_document(buf);
  CHECK(doc.domain == ScalarDomain::Rational);
  CHECK(std::get<CartanMatrix<Rational>>(doc.matrix).entries == c1.entries);
  CHECK(std::get<CartanMatrix<Rational>>(doc.matrix).labels == c1.labels);

  std::stringstream buf2;
  write_cartan_document(
      buf2, make_cartan_document(family::cartan_at(family::t_three())));
  auto doc2 = read_cartan_document(buf2);
  CHECK(std::get<CartanMatrix<Tower>>(doc2.matrix).entries(0, 5) ==
        -family::h().eval<Tower>(family::t_three()));

  std::stringstream buf3;
  write_cartan_document(buf3, make_cartan_document(family::cartan_symbolic()));
  auto doc3 = read_cartan_document(buf3);
  CHECK(std::get<CartanMatrix<RationalFunction>>(doc3.matrix).entries(0, 5) ==
        -family::h());

  std::stringstream bad("cartan 2\ndomain rational\n2 x\n-1 2\n");
  CHECK_THROWS_WITH_AS(read_cartan_document(bad),
                       doctest::Contains("row 1, entry 2"), ParseError);
}
