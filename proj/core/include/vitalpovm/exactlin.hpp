// Copyright 2026 The vitalpovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vitalpovm/error.hpp"
#include "vitalpovm/exact.hpp"

namespace vitalpovm {

// Dense row-major matrix. Zero-row and zero-column shapes are allowed so that
// empty vector families need no special casing.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (each of length n).
  static Matrix from_columns(const std::vector<std::vector<T>>& columns, std::size_t n) {
    Matrix m(n, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != n) throw Error(ErrorCode::DimensionMismatch, "vector of wrong dimension");
      for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<T> row_vector(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Conjugate transpose; equals transpose() over the rationals.
  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = conj((*this)(r, c));
    return t;
  }

  Matrix without_row(std::size_t skip) const {
    Matrix m(rows_ - 1, cols_);
    for (std::size_t r = 0, out = 0; r < rows_; ++r) {
      if (r == skip) continue;
      for (std::size_t c = 0; c < cols_; ++c) m(out, c) = (*this)(r, c);
      ++out;
    }
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (a.cols_ != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
    std::vector<T> y(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) y[i] += a(i, k) * x[k];
    return y;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference shape");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalVector = std::vector<Rational>;
using RationalMatrix = Matrix<Rational>;
using ExactVector = std::vector<Gaussian>;
using ExactMatrix = Matrix<Gaussian>;

// Rank over Q (resp. Q(i)) by fraction-free Bareiss elimination with
// first-nonzero pivoting.
template <class T>
std::size_t rank(const Matrix<T>& m);

// Basis of {x : Mx = 0}. Basis element f has a 1 in the f-th free column,
// zeros in the other free columns, and pivot entries from back substitution,
// i.e. the reduced-echelon parametrisation. Deterministic for a given M.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m);

/// True iff the vectors (each of dimension n) span the whole space.
template <class T>
bool spans(const std::vector<std::vector<T>>& vectors, std::size_t n);

/// Exact inverse, or nullopt if singular.
template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m);

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// <a, b> = sum conj(a_i) b_i.
inline Gaussian inner(std::span<const Gaussian> a, std::span<const Gaussian> b) {
  Gaussian s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].conj() * b[i];
  return s;
}

// Incremental fraction-free row echelon form over an integral domain
// (mpz_class or GaussInt). Rows are kept in insertion order; each row is zero
// at the pivot columns of every earlier row, so push/pop act as a stack and
// subset enumerations can share prefix work.
template <class Int>
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

  /// Adds v if it is independent of the current rows; returns whether it was.
  bool push(std::span<const Int> v) {
    std::vector<Int> w(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (is_zero(w[p])) continue;
      const Int f = w[p];
      const Int& g = rows_[r][p];
      for (std::size_t c = 0; c < dim_; ++c) w[c] = g * w[c] - f * rows_[r][c];
    }
    std::size_t pivot = dim_;
    for (std::size_t c = 0; c < dim_; ++c)
      if (!is_zero(w[c])) {
        pivot = c;
        break;
      }
    if (pivot == dim_) return false;
    mpz_class g = 0;
    for (const Int& x : w) {
      mpz_class cx = content(x);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cx.get_mpz_t());
    }
    if (g > 1)
      for (Int& x : w) divide_by(x, g);
    rows_.push_back(std::move(w));
    pivots_.push_back(pivot);
    return true;
  }

  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }

  void clear() {
    rows_.clear();
    pivots_.clear();
  }

  const std::vector<std::vector<Int>>& rows() const { return rows_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Int>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rank of a family of integral vectors, stopping early once full.
template <class Int>
std::size_t integral_rank(const std::vector<const std::vector<Int>*>& vectors, std::size_t dim) {
  IntegerEchelon<Int> e(dim);
  for (const auto* v : vectors) {
    e.push(*v);
    if (e.full()) break;
  }
  return e.rank();
}

/// Scales an integral vector to be primitive with positive leading entry.
std::vector<mpz_class> primitive(std::vector<mpz_class> v);
/// Same for a rational vector; the result is an integral vector.
std::vector<mpz_class> primitive(const RationalVector& v);

}  // namespace vitalpovm
