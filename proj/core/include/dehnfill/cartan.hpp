#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehnfill/matrix.hpp"

namespace dehnfill {

/// Square matrix with diagonal 2, non-positive off-diagonal entries and a
/// symmetric zero pattern. Entries may be point values or functions of t;
/// the sign condition is checked on construction only for ordered scalars
/// (function entries are certified by their producer).
template <FieldScalar K>
struct CartanMatrix {
  Mat<K> entries;
  std::vector<std::string> labels;

  CartanMatrix() = default;
  explicit CartanMatrix(Mat<K> m, std::vector<std::string> names = {})
      : entries(std::move(m)), labels(std::move(names)) {
    validate();
  }

  int size() const { return entries.rows(); }

  void validate() const {
    const int n = size();
    if (entries.cols() != n) throw DomainError("Cartan matrix must be square");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw DomainError("label count mismatch");
    for (int i = 0; i < n; ++i) {
      if (!(entries(i, i) == K(2)))
        throw DomainError("Cartan matrix needs diagonal entries 2");
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const bool zij = entries(i, j) == K(0);
        const bool zji = entries(j, i) == K(0);
        if (zij != zji)
          throw DomainError("Cartan zero pattern must be symmetric");
        if constexpr (OrderedScalar<K>) {
          if (!zij && sign(entries(i, j)) > 0)
            throw DomainError("Cartan off-diagonal entries must be <= 0");
        }
      }
    }
  }

  std::string label(int i) const {
    if (!labels.empty()) return labels[i];
    return "f" + std::to_string(i + 1);
  }
};

enum class CartanType { Positive, Zero, Negative };

std::string to_string(CartanType t);

/// Verdict with the witness data used to decide.
template <FieldScalar K>
struct TypeVerdict {
  CartanType type;
  int rank = 0;
  /// Positive: all n leading principal minors, each > 0.
  /// Negative via minors: the first non-positive one is the witness.
  std::vector<K> leading_minors;
  /// Zero: a strictly positive kernel vector (Perron eigenvector of 2I - A
  /// for the eigenvalue 2).
  std::optional<std::vector<K>> kernel;
};

/// Connected components of the nonzero off-diagonal pattern.
template <FieldScalar K>
std::vector<std::vector<int>> components(const CartanMatrix<K>& a) {
  const int n = a.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (int y = 0; y < n; ++y) {
        if (comp[y] < 0 && !(a.entries(x, y) == K(0))) {
          comp[y] = comp[x];
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

template <FieldScalar K>
bool is_irreducible(const CartanMatrix<K>& a) {
  return components(a).size() == 1;
}

/// Vinberg's trichotomy for an irreducible Cartan matrix, decided exactly:
///   Positive  <=>  all leading principal minors > 0 (nonsingular M-matrix),
///   Zero      <=>  rank n-1 and the kernel is spanned by a strictly
///                  positive vector (singular irreducible M-matrix),
///   Negative  otherwise.
template <OrderedScalar K>
TypeVerdict<K> classify(const CartanMatrix<K>& a) {
  if (!is_irreducible(a))
    throw DomainError("classify needs an irreducible matrix; use components()");
  TypeVerdict<K> v;
  v.rank = rank(a.entries);
  const int n = a.size();
  if (v.rank == n) {
    v.leading_minors = leading_principal_minors(a.entries);
    bool all_positive = true;
    for (const K& m : v.leading_minors) {
      if (sign(m) <= 0) {
        all_positive = false;
        break;
      }
    }
    v.type = all_positive ? CartanType::Positive : CartanType::Negative;
    return v;
  }
  if (v.rank == n - 1) {
    auto basis = kernel_basis(a.entries);
    // rank n-1 means a one-dimensional kernel
    const std::vector<K>& k = basis.front();
    int want = 0;
    bool uniform = true;
    for (const K& x : k) {
      int s = sign(x);
      if (s == 0) {
        uniform = false;
        break;
      }
      if (want == 0) want = s;
      if (s != want) {
        uniform = false;
        break;
      }
    }
    if (uniform) {
      std::vector<K> positive = k;
      if (want < 0)
        for (K& x : positive) x = -x;
      v.kernel = std::move(positive);
      v.type = CartanType::Zero;
      return v;
    }
  }
  v.type = CartanType::Negative;
  return v;
}

/// Per-component verdicts for a possibly reducible matrix.
template <OrderedScalar K>
std::vector<std::pair<std::vector<int>, TypeVerdict<K>>> classify_components(
    const CartanMatrix<K>& a) {
  std::vector<std::pair<std::vector<int>, TypeVerdict<K>>> out;
  for (auto& comp : components(a)) {
    CartanMatrix<K> sub(a.entries.submatrix(comp, comp));
    out.emplace_back(comp, classify(sub));
  }
  return out;
}

/// Exact rank; for function entries this is the generic rank over the
/// function field.
template <FieldScalar K>
int rank(const CartanMatrix<K>& a) {
  return rank(a.entries);
}

/// A = D B D^{-1} for a positive diagonal D? Decided by spanning-tree
/// propagation of D plus verification of every entry (equivalently: all
/// cycle products agree). Returns the diagonal witness when equivalent.
/// For point scalars the witness is positive; for function entries
/// positivity on the domain follows from the negativity of the entries.
template <FieldScalar K>
std::optional<std::vector<K>> equivalent(const CartanMatrix<K>& a,
                                         const CartanMatrix<K>& b) {
  const int n = a.size();
  if (b.size() != n) throw DomainError("equivalent needs equal sizes");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((a.entries(i, j) == K(0)) != (b.entries(i, j) == K(0)))
        return std::nullopt;
  // propagate d over each component: A_ij = d_i B_ij / d_j
  std::vector<K> d(n, K(0));
  std::vector<bool> done(n, false);
  for (int s = 0; s < n; ++s) {
    if (done[s]) continue;
    d[s] = K(1);
    done[s] = true;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (x == y || done[y] || a.entries(x, y) == K(0)) continue;
        // d_y = d_x * B_xy / A_xy
        d[y] = d[x] * b.entries(x, y) / a.entries(x, y);
        done[y] = true;
        stack.push_back(y);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || a.entries(i, j) == K(0)) continue;
      if (!(a.entries(i, j) * d[j] == d[i] * b.entries(i, j)))
        return std::nullopt;
    }
  return d;
}

/// S = A * Delta^{-1} symmetric for a positive diagonal Delta, when the
/// cycle products of A are symmetric.
template <FieldScalar K>
std::optional<std::pair<Mat<K>, std::vector<K>>> symmetrize(
    const CartanMatrix<K>& a) {
  const int n = a.size();
  // delta_i * A_ij = delta_j * A_ji
  std::vector<K> delta(n, K(0));
  std::vector<bool> done(n, false);
  for (int s = 0; s < n; ++s) {
    if (done[s]) continue;
    delta[s] = K(1);
    done[s] = true;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (x == y || done[y] || a.entries(x, y) == K(0)) continue;
        delta[y] = delta[x] * a.entries(x, y) / a.entries(y, x);
        done[y] = true;
        stack.push_back(y);
      }
    }
  }
  Mat<K> smat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) smat(i, j) = a.entries(i, j) / delta[j];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(smat(i, j) == smat(j, i))) return std::nullopt;
  return std::make_pair(std::move(smat), std::move(delta));
}

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Exact inertia of a symmetric matrix by congruence diagonalization with
/// symmetric pivoting; zero-diagonal pivots handled by the standard 2x2
/// block step (a hyperbolic pair contributes (1,1)).
template <OrderedScalar K>
Inertia signature(Mat<K> s) {
  const int n = s.rows();
  if (s.cols() != n) throw DomainError("signature needs a square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(s(i, j) == s(j, i))) throw DomainError("signature needs symmetry");

  Inertia out;
  std::vector<int> live;
  for (int i = 0; i < n; ++i) live.push_back(i);

  auto clear_with_pivot = [&](int p) {
    for (int i : live) {
      if (i == p || s(i, p) == K(0)) continue;
      K f = s(i, p) / s(p, p);
      for (int j : live) {
        if (j == p) continue;
        s(i, j) = s(i, j) - f * s(p, j);
      }
      s(i, p) = K(0);
      s(p, i) = K(0);
    }
  };

  while (!live.empty()) {
    int pivot = -1;
    for (int i : live) {
      if (!(s(i, i) == K(0))) {
        pivot = i;
        break;
      }
    }
    if (pivot >= 0) {
      clear_with_pivot(pivot);
      (sign(s(pivot, pivot)) > 0 ? out.positive : out.negative) += 1;
      live.erase(std::find(live.begin(), live.end(), pivot));
      continue;
    }
    // all diagonal entries zero; find an off-diagonal nonzero
    int pi = -1, pj = -1;
    for (size_t a_ = 0; a_ < live.size() && pi < 0; ++a_)
      for (size_t b_ = a_ + 1; b_ < live.size(); ++b_)
        if (!(s(live[a_], live[b_]) == K(0))) {
          pi = live[a_];
          pj = live[b_];
          break;
        }
    if (pi < 0) {
      out.zero += static_cast<int>(live.size());
      break;
    }
    // x^T [0 a; a 0] x diagonalizes to a, -a: add the rows to create a
    // nonzero diagonal pivot, then proceed as usual twice
    for (int j : live) s(pi, j) = s(pi, j) + s(pj, j);
    for (int i : live) s(i, pi) = s(i, pi) + s(i, pj);
    clear_with_pivot(pi);
    (sign(s(pi, pi)) > 0 ? out.positive : out.negative) += 1;
    live.erase(std::find(live.begin(), live.end(), pi));
    clear_with_pivot(pj);
    if (s(pj, pj) == K(0)) {
      out.zero += 1;
    } else {
      (sign(s(pj, pj)) > 0 ? out.positive : out.negative) += 1;
    }
    live.erase(std::find(live.begin(), live.end(), pj));
  }
  return out;
}

/// Conjugate by the permutation matrix of perm: out(i, j) =
/// a(perm^{-1}(i), perm^{-1}(j)); perm maps old index -> new index.
template <FieldScalar K>
CartanMatrix<K> permutation_conjugate(const CartanMatrix<K>& a,
                                      const std::vector<int>& perm) {
  const int n = a.size();
  Mat<K> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(perm[i], perm[j]) = a.entries(i, j);
  std::vector<std::string> labels;
  if (!a.labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[perm[i]] = a.labels[i];
  }
  return CartanMatrix<K>(std::move(m), std::move(labels));
}

/// --- matrix documents -----------------------------------------------------
/// Format:
///   cartan <N>
///   domain rational|tower|function-of-t
///   [labels <name> ... <name>]
///   N lines of N whitespace-separated entries
struct CartanDocument {
  ScalarDomain domain;
  std::variant<CartanMatrix<Rational>, CartanMatrix<Tower>,
               CartanMatrix<RationalFunction>>
      matrix;
};

CartanDocument read_cartan_document(std::istream& in);
CartanDocument read_cartan_file(const std::string& path);
void write_cartan_document(std::ostream& out, const CartanDocument& doc);

template <FieldScalar K>
CartanDocument make_cartan_document(CartanMatrix<K> m) {
  return CartanDocument{scalar_domain_of<K>::value, std::move(m)};
}

}  // namespace dehnfill
