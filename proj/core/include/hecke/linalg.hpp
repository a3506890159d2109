#pragma once

#include <optional>
#include <vector>

#include "hecke/matrix.hpp"

namespace hecke {

/// Gauss-Jordan elimination restricted to the first `ncols` columns (all
/// columns when negative); the remaining columns are carried along. Returns
/// the pivot columns. The input becomes reduced row echelon form.
template <class F>
std::vector<int> rref_inplace(Matrix<F>& a, int ncols = -1) {
  if (ncols < 0) ncols = a.cols();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < ncols && row < a.rows(); ++col) {
    int p = -1;
    for (int i = row; i < a.rows(); ++i)
      if (!is_zero_value(a(i, col))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const F inv = F(1) / a(row, col);
    for (int j = col; j < a.cols(); ++j)
      if (!is_zero_value(a(row, j))) a(row, j) = a(row, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero_value(a(i, col))) continue;
      const F f = a(i, col);
      for (int j = col; j < a.cols(); ++j)
        if (!is_zero_value(a(row, j))) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int rank(Matrix<F> a) {
  return static_cast<int>(rref_inplace(a).size());
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(1);
  }
  if (static_cast<int>(rref_inplace(aug, n).size()) < n) return std::nullopt;
  Matrix<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// For each column b of `rhs`, a particular solution x of a x = b (free
/// variables set to zero), or nullopt when inconsistent.
template <class F>
std::vector<std::optional<std::vector<F>>> solve_many(const Matrix<F>& a, const Matrix<F>& rhs) {
  const int n = a.cols();
  const int k = rhs.cols();
  Matrix<F> aug(a.rows(), n + k);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < k; ++j) aug(i, n + j) = rhs(i, j);
  }
  const auto pivots = rref_inplace(aug, n);
  const int r = static_cast<int>(pivots.size());
  std::vector<std::optional<std::vector<F>>> out;
  for (int j = 0; j < k; ++j) {
    bool ok = true;
    for (int i = r; i < a.rows(); ++i)
      if (!is_zero_value(aug(i, n + j))) {
        ok = false;
        break;
      }
    if (!ok) {
      out.emplace_back(std::nullopt);
      continue;
    }
    std::vector<F> x(static_cast<std::size_t>(n));
    for (int i = 0; i < r; ++i) x[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = aug(i, n + j);
    out.emplace_back(std::move(x));
  }
  return out;
}

template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  Matrix<F> rhs(a.rows(), 1);
  rhs.set_column(0, b);
  return solve_many(a, rhs).front();
}

/// Basis of {x : a x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> a) {
  const auto pivots = rref_inplace(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<F>> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<F> x(static_cast<std::size_t>(a.cols()));
    x[static_cast<std::size_t>(f)] = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[static_cast<std::size_t>(pivots[i])] = -a(static_cast<int>(i), f);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Fraction-free determinant over an integral domain with exact division
/// (Bareiss). `divide` must return the exact quotient.
template <class R, class Div>
R bareiss_determinant(Matrix<R> a, Div divide) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return R(1);
  R prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero_value(a(k, k))) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!is_zero_value(a(i, k))) {
          p = i;
          break;
        }
      if (p < 0) return R();
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        R v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = divide(v, prev);
      }
      a(i, k) = R();
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace hecke
