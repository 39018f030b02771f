#pragma once

#include <optional>
#include <vector>

#include "dehnfill/scalar.hpp"

namespace dehnfill {

/// Dense matrix over an exact field.
template <FieldScalar K>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(rows * cols, K(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  K& operator()(int i, int j) { return a_[i * c_ + j]; }
  const K& operator()(int i, int j) const { return a_[i * c_ + j]; }

  bool operator==(const Mat& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }

  Mat operator+(const Mat& o) const {
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
  }
  Mat operator-(const Mat& o) const {
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
  }
  Mat operator*(const Mat& o) const {
    Mat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const K& x = (*this)(i, k);
        if (x == K(0)) continue;
        for (int j = 0; j < o.c_; ++j) out(i, j) = out(i, j) + x * o(k, j);
      }
    return out;
  }
  Mat operator*(const K& s) const {
    Mat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
    return out;
  }

  Mat transpose() const {
    Mat out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Mat submatrix(const std::vector<int>& rows,
                const std::vector<int>& cols) const {
    Mat out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j)
        out(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
    return out;
  }

  Mat pow(unsigned e) const {
    Mat acc = identity(r_), base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

 private:
  int r_, c_;
  std::vector<K> a_;
};

namespace detail {

/// Row echelon by exact division; returns pivot (row, col) pairs. The matrix
/// is modified in place.
template <FieldScalar K>
std::vector<std::pair<int, int>> echelon(Mat<K>& m) {
  std::vector<std::pair<int, int>> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i) {
      if (!(m(i, col) == K(0))) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    for (int i = row + 1; i < m.rows(); ++i) {
      if (m(i, col) == K(0)) continue;
      K f = m(i, col) / m(row, col);
      for (int j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <FieldScalar K>
int rank(Mat<K> m) {
  return static_cast<int>(detail::echelon(m).size());
}

template <FieldScalar K>
K det(Mat<K> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  K result(1);
  int swaps = 0;
  for (int col = 0; col < m.cols(); ++col) {
    int p = -1;
    for (int i = col; i < m.rows(); ++i) {
      if (!(m(i, col) == K(0))) {
        p = i;
        break;
      }
    }
    if (p < 0) return K(0);
    if (p != col) {
      ++swaps;
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(col, j));
    }
    result = result * m(col, col);
    for (int i = col + 1; i < m.rows(); ++i) {
      if (m(i, col) == K(0)) continue;
      K f = m(i, col) / m(col, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(col, j);
    }
  }
  return (swaps % 2) ? -result : result;
}

/// Leading principal minors det(A[0..k, 0..k]) for k = 0..n-1.
template <FieldScalar K>
std::vector<K> leading_principal_minors(const Mat<K>& m) {
  std::vector<K> out;
  std::vector<int> idx;
  for (int k = 0; k < m.rows(); ++k) {
    idx.push_back(k);
    out.push_back(det(m.submatrix(idx, idx)));
  }
  return out;
}

/// A basis of the kernel (right null space).
template <FieldScalar K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m) {
  const int n = m.cols();
  auto pivots = detail::echelon(m);
  std::vector<int> pivot_col(pivots.size());
  std::vector<bool> is_pivot(n, false);
  for (size_t i = 0; i < pivots.size(); ++i) {
    pivot_col[i] = pivots[i].second;
    is_pivot[pivots[i].second] = true;
  }
  std::vector<std::vector<K>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(n, K(0));
    v[free] = K(1);
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
      auto [row, col] = pivots[i];
      K s(0);
      for (int j = col + 1; j < n; ++j)
        if (!(m(row, j) == K(0))) s = s + m(row, j) * v[j];
      v[col] = -s / m(row, col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial coefficients, ascending, monic of degree n.
/// Faddeev-LeVerrier; exact in characteristic zero.
template <FieldScalar K>
std::vector<K> charpoly(const Mat<K>& a) {
  if (a.rows() != a.cols()) throw DomainError("charpoly of non-square matrix");
  const int n = a.rows();
  std::vector<K> c(n + 1, K(0));
  c[n] = K(1);
  Mat<K> m = Mat<K>::identity(n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    K tr(0);
    for (int i = 0; i < n; ++i) tr = tr + m(i, i);
    K ck = -(tr / K(k));
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) m(i, i) = m(i, i) + ck;
  }
  return c;
}

template <FieldScalar K>
Mat<K> inverse(Mat<K> m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
  const int n = m.rows();
  Mat<K> inv = Mat<K>::identity(n);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i) {
      if (!(m(i, col) == K(0))) {
        p = i;
        break;
      }
    }
    if (p < 0) throw DomainError("inverse of singular matrix");
    if (p != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(p, j), m(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    }
    K piv = m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) = m(col, j) / piv;
      inv(col, j) = inv(col, j) / piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || m(i, col) == K(0)) continue;
      K f = m(i, col);
      for (int j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - f * m(col, j);
        inv(i, j) = inv(i, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace dehnfill
