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
#include <random>
#include <vector>

#include "vitalpovm/whiten.hpp"

namespace vitalpovm {

// Unit vector with canonical phase: the first entry of modulus above 1e-10
// is real and positive.
class PureState {
 public:
  /// Normalises and fixes the phase. Throws InvalidInput for a zero vector.
  explicit PureState(CVector v);

  const CVector& vector() const { return v_; }
  std::size_t dim() const { return static_cast<std::size_t>(v_.size()); }

 private:
  CVector v_;
};

/// <x, E_i x> for each element; x need not be normalised.
std::vector<double> outcome_weights(const std::vector<CMatrix>& elements, const CVector& x);

/// Born rule p_i = <psi, E_i psi>. Throws DimensionMismatch, or InvalidInput
/// when the POVM is not Parseval within `parseval_tol`.
std::vector<double> born_probabilities(const Povm& p, const PureState& psi, double parseval_tol = 1e-9);

/// Least-squares inversion over the symmetric / Hermitian operator space,
/// then the leading eigenvector. Throws NotIC if the measurement map is
/// rank-deficient, DimensionMismatch if p has the wrong length.
PureState reconstruct(const Povm& p, const std::vector<double>& outcomes);

/// Frobenius distance between the projectors; in [0, sqrt(2)].
double projector_error(const PureState& a, const PureState& b);

/// Normalised i.i.d. standard Gaussian vector (complex for Field::Complex).
PureState random_state(Field field, std::size_t n, std::mt19937_64& rng);

struct TomoResult {
  PureState truth;
  PureState estimate;
  double error = 0;
  std::vector<double> outcomes;  // noisy statistics fed to reconstruct
};

/// One round trip: Born statistics, additive N(0, sigma^2) noise, inversion.
TomoResult simulate(const Povm& p, const PureState& truth, double sigma, std::mt19937_64& rng);

struct NoiseSummary {
  std::size_t trials = 0;
  double sigma = 0;
  std::uint64_t seed = 0;
  std::vector<double> errors;  // per trial, in trial order
  double mean = 0;
  double median = 0;
  double max = 0;
};

/// Trial t draws its state and noise from derived_engine(seed, t), so the
/// result does not depend on the worker count.
NoiseSummary noise_sweep(const Povm& p, std::size_t trials, double sigma, std::uint64_t seed, unsigned threads = 0);

}  // namespace vitalpovm
