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

#include "vitalpovm/exactlin.hpp"

#include <utility>

namespace vitalpovm {

namespace {

template <class Int>
Int one();
template <>
mpz_class one<mpz_class>() {
  return 1;
}
template <>
GaussInt one<GaussInt>() {
  return {1, 0};
}

template <class T>
struct IntegralOf;
template <>
struct IntegralOf<Rational> {
  using type = mpz_class;
};
template <>
struct IntegralOf<Gaussian> {
  using type = GaussInt;
};

template <class Int>
struct Echelon {
  std::vector<std::vector<Int>> rows;  // first pivots.size() rows are the echelon form
  std::vector<std::size_t> pivots;
};

// Fraction-free Gaussian elimination. After processing pivot (r, c) every
// entry below and to the right is a minor of the original matrix, so the
// division by the previous pivot is exact.
template <class Int>
Echelon<Int> bareiss(std::vector<std::vector<Int>> a, std::size_t cols) {
  const std::size_t nrows = a.size();
  std::vector<std::size_t> pivots;
  Int prev = one<Int>();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && is_zero(a[p][c])) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) a[i][k] = divexact(a[r][c] * a[i][k] - a[i][c] * a[r][k], prev);
      a[i][c] = Int{};
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <class T>
Echelon<typename IntegralOf<T>::type> echelon_of(const Matrix<T>& m) {
  using Int = typename IntegralOf<T>::type;
  std::vector<std::vector<Int>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(integral_row(m.row_vector(r)));
  return bareiss<Int>(std::move(rows), m.cols());
}

}  // namespace

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return echelon_of(m).pivots.size();
}

template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
  const auto ech = echelon_of(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : ech.pivots) is_pivot[p] = true;

  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> x(cols, T(0));
    x[f] = T(1);
    for (std::size_t i = ech.pivots.size(); i-- > 0;) {
      const std::size_t p = ech.pivots[i];
      T s(0);
      for (std::size_t k = p + 1; k < cols; ++k)
        if (!is_zero(x[k]) && !is_zero(ech.rows[i][k])) s += to_field(ech.rows[i][k]) * x[k];
      x[p] = -s / to_field(ech.rows[i][p]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class T>
bool spans(const std::vector<std::vector<T>>& vectors, std::size_t n) {
  if (vectors.size() < n) return false;
  return rank(Matrix<T>::from_rows(vectors, n)) == n;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(p, k), a(c, k));
        std::swap(inv(p, k), inv(c, k));
      }
    const T d = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= d;
      inv(c, k) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(i, k) -= f * a(c, k);
        inv(i, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

std::vector<mpz_class> primitive(std::vector<mpz_class> v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (sgn(g) == 0) return v;
  int lead = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) {
      lead = sgn(x);
      break;
    }
  if (lead < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

std::vector<mpz_class> primitive(const RationalVector& v) { return primitive(integral_row(v)); }

template std::size_t rank<Rational>(const Matrix<Rational>&);
template std::size_t rank<Gaussian>(const Matrix<Gaussian>&);
template std::vector<std::vector<Rational>> nullspace<Rational>(const Matrix<Rational>&);
template std::vector<std::vector<Gaussian>> nullspace<Gaussian>(const Matrix<Gaussian>&);
template bool spans<Rational>(const std::vector<std::vector<Rational>>&, std::size_t);
template bool spans<Gaussian>(const std::vector<std::vector<Gaussian>>&, std::size_t);
template std::optional<Matrix<Rational>> inverse<Rational>(const Matrix<Rational>&);
template std::optional<Matrix<Gaussian>> inverse<Gaussian>(const Matrix<Gaussian>&);

}  // namespace vitalpovm
