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

#include "vitalpovm/tomo.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vitalpovm/parallel.hpp"
#include "vitalpovm/random.hpp"

namespace vitalpovm {

PureState::PureState(CVector v) : v_(std::move(v)) {
  const double norm = v_.norm();
  if (!(norm > 0) || !std::isfinite(norm)) throw Error(ErrorCode::InvalidInput, "state vector must be nonzero");
  v_ /= norm;
  for (Eigen::Index i = 0; i < v_.size(); ++i)
    if (std::abs(v_(i)) > 1e-10) {
      v_ *= std::conj(v_(i)) / std::abs(v_(i));
      v_(i) = std::abs(v_(i));
      break;
    }
}

std::vector<double> outcome_weights(const std::vector<CMatrix>& elements, const CVector& x) {
  std::vector<double> out;
  out.reserve(elements.size());
  for (const auto& e : elements) {
    if (e.rows() != x.size()) throw Error(ErrorCode::DimensionMismatch, "state and POVM dimensions differ");
    out.push_back(x.dot(e * x).real());
  }
  return out;
}

std::vector<double> born_probabilities(const Povm& p, const PureState& psi, double parseval_tol) {
  if (psi.dim() != p.n) throw Error(ErrorCode::DimensionMismatch, "state and POVM dimensions differ");
  if (!(p.parseval_residual() <= parseval_tol))
    throw Error(ErrorCode::InvalidInput, "POVM elements do not sum to the identity");
  return outcome_weights(p.elements, psi.vector());
}

namespace {

// Row of the linear map A -> Tr(A E) in the coordinates
// (A_kk; Re A_kl, k<l; Im A_kl, k<l).
Eigen::VectorXd float_pairing_row(Field field, const CMatrix& e) {
  const Eigen::Index n = e.rows();
  Eigen::VectorXd row(static_cast<Eigen::Index>(operator_space_dim(field, static_cast<std::size_t>(n))));
  Eigen::Index idx = 0;
  for (Eigen::Index k = 0; k < n; ++k) row(idx++) = e(k, k).real();
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = k + 1; l < n; ++l) row(idx++) = 2 * e(k, l).real();
  if (field == Field::Complex)
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index l = k + 1; l < n; ++l) row(idx++) = 2 * e(k, l).imag();
  return row;
}

CMatrix float_from_coords(Field field, Eigen::Index n, const Eigen::VectorXd& x) {
  CMatrix a = CMatrix::Zero(n, n);
  Eigen::Index idx = 0;
  for (Eigen::Index k = 0; k < n; ++k) a(k, k) = x(idx++);
  for (Eigen::Index k = 0; k < n; ++k)
    for (Eigen::Index l = k + 1; l < n; ++l) {
      a(k, l) = a(l, k) = x(idx++);
    }
  if (field == Field::Complex)
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index l = k + 1; l < n; ++l) {
        a(k, l) += std::complex<double>(0, x(idx));
        a(l, k) -= std::complex<double>(0, x(idx));
        ++idx;
      }
  return a;
}

}  // namespace

PureState reconstruct(const Povm& p, const std::vector<double>& outcomes) {
  if (outcomes.size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "outcome count differs from POVM size");
  const auto dim = static_cast<Eigen::Index>(operator_space_dim(p.field, p.n));
  Eigen::MatrixXd m(static_cast<Eigen::Index>(p.size()), dim);
  for (std::size_t i = 0; i < p.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = float_pairing_row(p.field, p.elements[i]);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-10);
  if (qr.rank() < dim)
    throw Error(ErrorCode::NotIC, "measurement map has rank " + std::to_string(qr.rank()) + " < " + std::to_string(dim));
  const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(outcomes.data(), static_cast<Eigen::Index>(outcomes.size()));
  const Eigen::VectorXd x = qr.solve(b);
  const CMatrix a = float_from_coords(p.field, static_cast<Eigen::Index>(p.n), x);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(a);
  CVector lead = eig.eigenvectors().col(eig.eigenvectors().cols() - 1);
  if (p.field == Field::Real) lead = lead.real().cast<std::complex<double>>();
  return PureState(std::move(lead));
}

double projector_error(const PureState& a, const PureState& b) {
  const CMatrix d = a.vector() * a.vector().adjoint() - b.vector() * b.vector().adjoint();
  return d.norm();
}

PureState random_state(Field field, std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = g(rng);
    const double im = field == Field::Complex ? g(rng) : 0.0;
    v(i) = {re, im};
  }
  return PureState(std::move(v));
}

TomoResult simulate(const Povm& p, const PureState& truth, double sigma, std::mt19937_64& rng) {
  std::vector<double> outcomes = born_probabilities(p, truth);
  if (sigma > 0) {
    std::normal_distribution<double> g(0.0, sigma);
    for (auto& x : outcomes) x += g(rng);
  }
  PureState estimate = reconstruct(p, outcomes);
  const double err = projector_error(truth, estimate);
  return {truth, std::move(estimate), err, std::move(outcomes)};
}

NoiseSummary noise_sweep(const Povm& p, std::size_t trials, double sigma, std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw Error(ErrorCode::InvalidInput, "trials must be at least 1");
  if (!(sigma >= 0)) throw Error(ErrorCode::InvalidInput, "noise sigma must be non-negative");
  NoiseSummary s;
  s.trials = trials;
  s.sigma = sigma;
  s.seed = seed;
  s.errors.assign(trials, 0.0);
  unsigned workers = threads ? threads : worker_count();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, trials));
  run_workers(workers, [&](unsigned w) {
    for (std::size_t t = w; t < trials; t += workers) {
      auto rng = derived_engine(seed, t);
      const PureState truth = random_state(p.field, p.n, rng);
      s.errors[t] = simulate(p, truth, sigma, rng).error;
    }
  });
  std::vector<double> sorted = s.errors;
  std::sort(sorted.begin(), sorted.end());
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(trials);
  s.median = trials % 2 ? sorted[trials / 2] : 0.5 * (sorted[trials / 2 - 1] + sorted[trials / 2]);
  s.max = sorted.back();
  return s;
}

}  // namespace vitalpovm
