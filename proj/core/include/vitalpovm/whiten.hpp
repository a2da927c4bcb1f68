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

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "vitalpovm/frames.hpp"

namespace vitalpovm {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

CVector to_float(std::span<const Gaussian> v);
CMatrix to_float(const ExactMatrix& m);

// S^{-1/2} and S^{1/2} for the frame operator S, from the singular value
// decomposition of the synthesis matrix [v_1 ... v_m]. A collision pair
// (psi, phi) of the frame maps to the pair (S^{1/2} psi, S^{1/2} phi) for the
// whitened POVM.
struct Whitening {
  CMatrix inv_sqrt;
  CMatrix sqrt;
};

/// Throws NotAFrame unless F spans (decided exactly).
Whitening whitening_transform(const Frame& f);

// Floating-point rank-one POVM E_i = w_i w_i^*.
struct Povm {
  Field field = Field::Real;
  std::size_t n = 0;
  std::vector<CVector> vectors;
  std::vector<CMatrix> elements;
  std::vector<std::string> labels;

  std::size_t size() const { return elements.size(); }
  /// max-abs entry of sum_i E_i - I.
  double parseval_residual() const;
  /// The elements {E_i}_{i != j}; not a POVM on its own.
  std::vector<CMatrix> subcollection_without(std::size_t j) const;
};

/// w_i = S^{-1/2} v_i. Throws NotAFrame if F does not span, or InvalidInput if
/// the Parseval residual exceeds `tolerance`.
Povm whiten(const Frame& f, double tolerance = 1e-10);

}  // namespace vitalpovm
