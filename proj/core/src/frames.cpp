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

#include "vitalpovm/frames.hpp"

#include <utility>

#include "vitalpovm/random.hpp"

namespace vitalpovm {

std::string_view to_string(Field field) { return field == Field::Real ? "R" : "C"; }

Frame::Frame(Field field, std::size_t n, std::vector<ExactVector> vectors, std::vector<std::string> labels,
             FrameMeta meta)
    : field_(field), n_(n), vectors_(std::move(vectors)), labels_(std::move(labels)), meta_(std::move(meta)) {
  if (n_ == 0) throw Error(ErrorCode::InvalidInput, "frame dimension must be positive");
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    const auto& v = vectors_[i];
    if (v.size() != n_)
      throw Error(ErrorCode::DimensionMismatch, "vector " + std::to_string(i + 1) + " has dimension " +
                                                    std::to_string(v.size()) + ", expected " + std::to_string(n_));
    bool nonzero = false;
    for (const auto& z : v) {
      if (field_ == Field::Real && !z.is_real())
        throw Error(ErrorCode::WrongField, "real frame has a non-real entry in vector " + std::to_string(i + 1));
      nonzero = nonzero || !z.is_zero();
    }
    if (!nonzero) throw Error(ErrorCode::InvalidInput, "vector " + std::to_string(i + 1) + " is zero");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < vectors_.size(); ++i) labels_.push_back("f" + std::to_string(i + 1));
  } else if (labels_.size() != vectors_.size()) {
    throw Error(ErrorCode::InvalidInput, "labels length does not match vector count");
  }
}

std::vector<RationalVector> Frame::real_vectors() const {
  if (field_ != Field::Real) throw Error(ErrorCode::WrongField, "operation requires a real frame");
  std::vector<RationalVector> out;
  out.reserve(vectors_.size());
  for (const auto& v : vectors_) {
    RationalVector r;
    r.reserve(n_);
    for (const auto& z : v) r.push_back(z.re());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<mpz_class>> Frame::integral_vectors() const {
  std::vector<std::vector<mpz_class>> out;
  for (const auto& v : real_vectors()) out.push_back(integral_row(v));
  return out;
}

std::vector<std::vector<GaussInt>> Frame::gaussian_integral_vectors() const {
  std::vector<std::vector<GaussInt>> out;
  out.reserve(vectors_.size());
  for (const auto& v : vectors_) out.push_back(integral_row(v));
  return out;
}

Frame Frame::without(std::size_t j) const {
  if (j >= vectors_.size()) throw Error(ErrorCode::InvalidInput, "index out of range");
  std::vector<ExactVector> vs;
  std::vector<std::string> ls;
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (i == j) continue;
    vs.push_back(vectors_[i]);
    ls.push_back(labels_[i]);
  }
  return Frame(field_, n_, std::move(vs), std::move(ls), meta_);
}

Frame Frame::select(std::span<const std::size_t> indices) const {
  std::vector<ExactVector> vs;
  std::vector<std::string> ls;
  for (auto i : indices) {
    if (i >= vectors_.size()) throw Error(ErrorCode::InvalidInput, "index out of range");
    vs.push_back(vectors_[i]);
    ls.push_back(labels_[i]);
  }
  return Frame(field_, n_, std::move(vs), std::move(ls), meta_);
}

Frame Frame::transformed(const ExactMatrix& a) const {
  if (a.rows() != n_ || a.cols() != n_) throw Error(ErrorCode::DimensionMismatch, "transform must be n x n");
  std::vector<ExactVector> vs;
  vs.reserve(vectors_.size());
  for (const auto& v : vectors_) vs.push_back(a * v);
  return Frame(field_, n_, std::move(vs), labels_, meta_);
}

std::size_t frame_rank(const Frame& f) {
  IntegerEchelon<GaussInt> e(f.dim());
  for (const auto& v : f.gaussian_integral_vectors()) {
    e.push(v);
    if (e.full()) break;
  }
  return e.rank();
}

bool spans(const Frame& f) { return frame_rank(f) == f.dim(); }

ExactMatrix outer(std::span<const Gaussian> v) {
  ExactMatrix m(v.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * v[c].conj();
  return m;
}

ExactMatrix frame_operator(const Frame& f) {
  if (f.size() == 0) throw Error(ErrorCode::InvalidInput, "frame operator of an empty frame");
  ExactMatrix s(f.dim(), f.dim());
  for (const auto& v : f.vectors()) s = s + outer(v);
  return s;
}

std::size_t operator_space_dim(Field field, std::size_t n) {
  return field == Field::Real ? n * (n + 1) / 2 : n * n;
}

bool is_hermitian(Field field, const ExactMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = r; c < a.cols(); ++c) {
      if (field == Field::Real && !a(r, c).is_real()) return false;
      if (!(a(r, c) == a(c, r).conj())) return false;
    }
  return true;
}

RationalVector operator_coords(Field field, const ExactMatrix& a) {
  if (!is_hermitian(field, a))
    throw Error(ErrorCode::NonHermitianInput,
                field == Field::Real ? "operator is not real symmetric" : "operator is not Hermitian");
  const std::size_t n = a.rows();
  RationalVector coords;
  coords.reserve(operator_space_dim(field, n));
  for (std::size_t k = 0; k < n; ++k) coords.push_back(a(k, k).re());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) coords.push_back(a(k, l).re());
  if (field == Field::Complex)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) coords.push_back(a(k, l).im());
  return coords;
}

ExactMatrix from_operator_coords(Field field, std::size_t n, std::span<const Rational> coords) {
  if (coords.size() != operator_space_dim(field, n))
    throw Error(ErrorCode::DimensionMismatch, "coordinate vector has wrong length");
  ExactMatrix a(n, n);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < n; ++k) a(k, k) = coords[idx++];
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      a(k, l) = coords[idx];
      a(l, k) = coords[idx];
      ++idx;
    }
  if (field == Field::Complex)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) {
        a(k, l) = Gaussian(a(k, l).re(), coords[idx]);
        a(l, k) = a(k, l).conj();
        ++idx;
      }
  return a;
}

RationalVector pairing_row(Field field, std::span<const Gaussian> v) {
  const std::size_t n = v.size();
  RationalVector row;
  row.reserve(operator_space_dim(field, n));
  for (std::size_t k = 0; k < n; ++k) row.push_back(v[k].norm2());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) row.push_back(2 * (v[k].conj() * v[l]).re());
  if (field == Field::Complex)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) row.push_back(-2 * (v[k].conj() * v[l]).im());
  return row;
}

RationalMatrix measurement_matrix(const Frame& f) {
  RationalMatrix m(f.size(), operator_space_dim(f.field(), f.dim()));
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto row = pairing_row(f.field(), f[i]);
    for (std::size_t c = 0; c < row.size(); ++c) m(i, c) = row[c];
  }
  return m;
}

RationalVector apply_measurement(const Frame& f, const ExactMatrix& a) {
  if (a.rows() != f.dim() || a.cols() != f.dim())
    throw Error(ErrorCode::DimensionMismatch, "operator must be n x n");
  if (!is_hermitian(f.field(), a))
    throw Error(ErrorCode::NonHermitianInput,
                f.field() == Field::Real ? "operator is not real symmetric" : "operator is not Hermitian");
  RationalVector out;
  out.reserve(f.size());
  for (const auto& v : f.vectors()) {
    // v^* A v
    const ExactVector av = a * v;
    out.push_back(inner(v, av).re());
  }
  return out;
}

namespace {

ExactVector unit(std::size_t n, std::size_t k) {
  ExactVector e(n, Gaussian(0));
  e[k] = Gaussian(1);
  return e;
}

void require_dim(std::size_t n, std::size_t minimum, std::string_view what) {
  if (n < minimum)
    throw Error(ErrorCode::DimensionTooSmall,
                std::string(what) + " requires n >= " + std::to_string(minimum) + ", got " + std::to_string(n));
}

void push_basis(std::size_t n, std::vector<ExactVector>& vs, std::vector<std::string>& ls) {
  for (std::size_t k = 0; k < n; ++k) {
    vs.push_back(unit(n, k));
    ls.push_back("e" + std::to_string(k + 1));
  }
}

}  // namespace

Frame construct_real_max(std::size_t n) {
  require_dim(n, 2, "real-max");
  std::vector<ExactVector> vs;
  std::vector<std::string> ls;
  push_basis(n, vs, ls);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ExactVector v = unit(n, i);
      v[j] = Gaussian(1);
      vs.push_back(std::move(v));
      ls.push_back("e" + std::to_string(i + 1) + "+e" + std::to_string(j + 1));
    }
  return Frame(Field::Real, n, std::move(vs), std::move(ls), {"real-max", 0});
}

Frame construct_complex_max(std::size_t n) {
  require_dim(n, 2, "complex-max");
  std::vector<ExactVector> vs;
  std::vector<std::string> ls;
  push_basis(n, vs, ls);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      ExactVector v = unit(n, k);
      v[l] = Gaussian(1);
      vs.push_back(std::move(v));
      ls.push_back("e" + std::to_string(k + 1) + "+e" + std::to_string(l + 1));
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      ExactVector v = unit(n, k);
      v[l] = Gaussian(0, 1);
      vs.push_back(std::move(v));
      ls.push_back("e" + std::to_string(k + 1) + "+ie" + std::to_string(l + 1));
    }
  return Frame(Field::Complex, n, std::move(vs), std::move(ls), {"complex-max", 0});
}

Frame construct_cauchy_full_spark(std::size_t n) {
  require_dim(n, 2, "cauchy");
  std::vector<ExactVector> vs;
  std::vector<std::string> ls;
  push_basis(n, vs, ls);
  for (std::size_t j = 1; j < n; ++j) {
    ExactVector v(n);
    for (std::size_t i = 1; i <= n; ++i) v[i - 1] = Gaussian(Rational(mpz_class(1), mpz_class(static_cast<unsigned long>(i + j))));
    vs.push_back(std::move(v));
    ls.push_back("c" + std::to_string(j));
  }
  return Frame(Field::Real, n, std::move(vs), std::move(ls), {"cauchy", 0});
}

Frame construct_gonzalez_2n(std::size_t n, std::uint64_t seed) {
  require_dim(n, 3, "gonzalez");
  CoefficientRng rng(seed);
  std::vector<ExactVector> vs;
  std::vector<std::string> ls;
  push_basis(n, vs, ls);
  std::vector<ExactVector> ws;
  for (std::size_t l = 1; l < n; ++l) {
    const std::size_t missing = n - l;  // 0-based index of point n - l + 1
    ExactVector w(n, Gaussian(0));
    for (std::size_t k = 0; k < n; ++k)
      if (k != missing) w[k] = rng.next_nonzero();
    ws.push_back(std::move(w));
  }
  ExactVector last(n, Gaussian(0));
  for (const auto& w : ws) {
    const Gaussian lambda = rng.next_nonzero();
    for (std::size_t k = 0; k < n; ++k) last[k] += lambda * w[k];
  }
  ws.push_back(std::move(last));
  for (std::size_t l = 0; l < ws.size(); ++l) {
    vs.push_back(std::move(ws[l]));
    ls.push_back("w" + std::to_string(l + 1));
  }
  return Frame(Field::Real, n, std::move(vs), std::move(ls), {"gonzalez", seed});
}

Frame standard_form(const Frame& f) {
  const std::size_t n = f.dim();
  IntegerEchelon<GaussInt> e(n);
  std::vector<std::size_t> basis;
  std::vector<std::size_t> rest;
  const auto ints = f.gaussian_integral_vectors();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!e.full() && e.push(ints[i]))
      basis.push_back(i);
    else
      rest.push_back(i);
  }
  if (basis.size() < n) throw Error(ErrorCode::NotAFrame, "standard form requires a spanning family");
  std::vector<ExactVector> cols;
  for (auto i : basis) cols.push_back(f[i]);
  const auto b_inv = inverse(ExactMatrix::from_columns(cols, n));
  std::vector<std::size_t> order = basis;
  order.insert(order.end(), rest.begin(), rest.end());
  return f.select(order).transformed(*b_inv);
}

}  // namespace vitalpovm
