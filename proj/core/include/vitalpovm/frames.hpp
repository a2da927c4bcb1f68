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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vitalpovm/exactlin.hpp"

namespace vitalpovm {

enum class Field { Real, Complex };

std::string_view to_string(Field field);

struct FrameMeta {
  std::string construction;
  std::uint64_t seed = 0;

  friend bool operator==(const FrameMeta&, const FrameMeta&) = default;
};

// An ordered family of nonzero exact vectors in K^n, K = R or C, with one
// provenance label per vector. Spanning is not an invariant; use spans().
// Real frames hold Gaussian scalars with zero imaginary part.
class Frame {
 public:
  Frame(Field field, std::size_t n, std::vector<ExactVector> vectors, std::vector<std::string> labels = {},
        FrameMeta meta = {});

  Field field() const { return field_; }
  std::size_t dim() const { return n_; }
  std::size_t size() const { return vectors_.size(); }

  const ExactVector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<ExactVector>& vectors() const { return vectors_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const FrameMeta& meta() const { return meta_; }

  /// Real parts of the vectors; throws WrongField for complex frames.
  std::vector<RationalVector> real_vectors() const;
  /// Each vector scaled by a positive integer to clear denominators (real frames).
  std::vector<std::vector<mpz_class>> integral_vectors() const;
  /// Same over Z[i]; valid for either field.
  std::vector<std::vector<GaussInt>> gaussian_integral_vectors() const;

  Frame without(std::size_t j) const;
  Frame select(std::span<const std::size_t> indices) const;
  /// {A v_i}; labels and meta are kept.
  Frame transformed(const ExactMatrix& a) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  Field field_;
  std::size_t n_;
  std::vector<ExactVector> vectors_;
  std::vector<std::string> labels_;
  FrameMeta meta_;
};

std::size_t frame_rank(const Frame& f);
bool spans(const Frame& f);

/// v v^*.
ExactMatrix outer(std::span<const Gaussian> v);

/// S = sum_i v_i v_i^*.
ExactMatrix frame_operator(const Frame& f);

// Coordinates on the real operator space (symmetric matrices S_n for Real,
// Hermitian H_n for Complex). Order: diagonal entries A_kk; then Re A_kl for
// k < l in lexicographic order; then (Complex only) Im A_kl for k < l.
// Coordinates are stored unweighted: the pairing <A, E> = Tr(A E) is
//   sum_k A_kk E_kk + 2 sum_{k<l} (Re A_kl Re E_kl + Im A_kl Im E_kl),
// so off-diagonal coordinates carry a factor 2 in pairing_row().
std::size_t operator_space_dim(Field field, std::size_t n);
RationalVector operator_coords(Field field, const ExactMatrix& a);
ExactMatrix from_operator_coords(Field field, std::size_t n, std::span<const Rational> coords);
bool is_hermitian(Field field, const ExactMatrix& a);

/// Row r(v) with r(v) . coords(A) = Tr(A v v^*).
RationalVector pairing_row(Field field, std::span<const Gaussian> v);

/// m x dim matrix of A -> (<A, v_i v_i^*>)_i on unwhitened vectors.
RationalMatrix measurement_matrix(const Frame& f);

/// (Tr(A v_i v_i^*))_i; throws NonHermitianInput.
RationalVector apply_measurement(const Frame& f, const ExactMatrix& a);

// Constructions. Vector order is fixed so output is byte-stable.

/// {e_1..e_n} then {e_i + e_j}_{i<j} lexicographically.
Frame construct_real_max(std::size_t n);
/// {e_1..e_n}, {e_k + e_l}_{k<l}, {e_k + i e_l}_{k<l}.
Frame construct_complex_max(std::size_t n);
/// {e_1..e_n} plus the columns of V[i][j] = 1/(i + j), i = 1..n, j = 1..n-1.
Frame construct_cauchy_full_spark(std::size_t n);
/// {e_1..e_n, w_1..w_n}: w_l (l < n) is random with support [n] minus
/// {n - l + 1}; w_n = sum_i lambda_i w_i with random nonzero lambda_i.
Frame construct_gonzalez_2n(std::size_t n, std::uint64_t seed);

/// Moves the first (in index order) n independent vectors to the front and
/// maps them to e_1..e_n. Throws NotAFrame if F does not span.
Frame standard_form(const Frame& f);

}  // namespace vitalpovm
