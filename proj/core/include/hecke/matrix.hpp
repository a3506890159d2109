#pragma once

#include <gmpxx.h>

#include <functional>
#include <stdexcept>
#include <vector>

#include "hecke/cyclo.hpp"
#include "hecke/laurent.hpp"
#include "hecke/qpoly.hpp"

namespace hecke {

inline bool is_zero_value(const LaurentPoly& x) { return x.is_zero(); }
inline bool is_zero_value(const CycloNum& x) { return x.is_zero(); }
inline bool is_zero_value(const RatFunc& x) { return x.is_zero(); }
inline bool is_zero_value(const mpq_class& x) { return sgn(x) == 0; }

/// Coefficient involution: q -> q^{-1} on Laurent polynomials, complex
/// conjugation on cyclotomic numbers.
inline LaurentPoly bar_value(const LaurentPoly& x) { return x.bar(); }
inline CycloNum bar_value(const CycloNum& x) { return x.conj(); }

/// Dense row-major matrix over a commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[idx(i, j)]; }
  const T& operator()(int i, int j) const { return data_[idx(i, j)]; }

  std::vector<T> column(int j) const {
    std::vector<T> v(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
    return v;
  }
  void set_column(int j, const std::vector<T>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[static_cast<std::size_t>(i)];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!is_zero_value(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  Matrix scaled(const T& s) const {
    Matrix out = *this;
    for (auto& x : out.data_)
      if (!is_zero_value(x)) x = s * x;
    return out;
  }

  /// Product skipping zero entries of the left factor.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero_value(x)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!is_zero_value(y)) out(i, j) += x * y;
        }
      }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& x = (*this)(i, k);
        const T& y = v[static_cast<std::size_t>(k)];
        if (!is_zero_value(x) && !is_zero_value(y)) out[static_cast<std::size_t>(i)] += x * y;
      }
    return out;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j); }
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

/// Entrywise coefficient involution followed by transpose.
template <class T>
Matrix<T> adjoint(const Matrix<T>& m) {
  return m.transpose().map([](const T& x) { return bar_value(x); });
}

template <class T>
Matrix<T> conj_entries(const Matrix<T>& m) {
  return m.map([](const T& x) { return bar_value(x); });
}

inline Matrix<CycloNum> specialize(const Matrix<LaurentPoly>& m, const RationalC& c) {
  return m.map([&](const LaurentPoly& p) { return specialize(p, c); });
}

}  // namespace hecke
