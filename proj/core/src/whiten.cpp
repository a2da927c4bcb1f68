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

#include "vitalpovm/whiten.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace vitalpovm {

CVector to_float(std::span<const Gaussian> v) {
  CVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = {v[i].re().get_d(), v[i].im().get_d()};
  return out;
}

CMatrix to_float(const ExactMatrix& m) {
  CMatrix out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {m(r, c).re().get_d(), m(r, c).im().get_d()};
  return out;
}

namespace {

// Thin SVD of the n x m synthesis matrix V = U diag(sigma) W^*. Then
// S = U diag(sigma^2) U^*, and S^{-1/2} V = U W^* has orthonormal rows to
// working precision even when S is badly conditioned.
struct Synthesis {
  CMatrix u;
  Eigen::VectorXd sigma;
  CMatrix w;
};

Synthesis synthesis_svd(const Frame& f) {
  if (!spans(f)) throw Error(ErrorCode::NotAFrame, "vectors do not span; whitening is undefined");
  CMatrix v(static_cast<Eigen::Index>(f.dim()), static_cast<Eigen::Index>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i) v.col(static_cast<Eigen::Index>(i)) = to_float(f[i]);
  Eigen::JacobiSVD<CMatrix> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

}  // namespace

Whitening whitening_transform(const Frame& f) {
  const Synthesis s = synthesis_svd(f);
  const Eigen::VectorXd inv = s.sigma.cwiseInverse();
  Whitening w;
  w.inv_sqrt = s.u * inv.cast<std::complex<double>>().asDiagonal() * s.u.adjoint();
  w.sqrt = s.u * s.sigma.cast<std::complex<double>>().asDiagonal() * s.u.adjoint();
  return w;
}

double Povm::parseval_residual() const {
  CMatrix sum = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& e : elements) sum += e;
  sum -= CMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  return sum.cwiseAbs().maxCoeff();
}

std::vector<CMatrix> Povm::subcollection_without(std::size_t j) const {
  std::vector<CMatrix> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (i != j) out.push_back(elements[i]);
  return out;
}

Povm whiten(const Frame& f, double tolerance) {
  const Synthesis s = synthesis_svd(f);
  const CMatrix whitened = s.u * s.w.adjoint();
  Povm p;
  p.field = f.field();
  p.n = f.dim();
  p.labels = f.labels();
  for (std::size_t i = 0; i < f.size(); ++i) {
    CVector w = whitened.col(static_cast<Eigen::Index>(i));
    if (f.field() == Field::Real) w = w.real().cast<std::complex<double>>();
    p.elements.push_back(w * w.adjoint());
    p.vectors.push_back(std::move(w));
  }
  const double residual = p.parseval_residual();
  if (!(residual <= tolerance))
    throw Error(ErrorCode::InvalidInput, "whitened Parseval residual " + std::to_string(residual) + " exceeds tolerance");
  return p;
}

}  // namespace vitalpovm
