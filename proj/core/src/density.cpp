// Copyright 2026 The qsdc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsdc/density.hpp"

#include <cmath>

namespace qsdc {

namespace {

// Accumulated rounding may push an eigenvalue slightly negative; anything
// below this signals a real positivity violation.
constexpr double kPsdEigenFloor = -1e-10;

}  // namespace

TwoQubitDensity::TwoQubitDensity(const Mat4& rho) : rho_(rho) {
  if (!is_hermitian(rho_, kTolExact))
    throw std::invalid_argument("density matrix must be Hermitian");
  if (std::abs(rho_.trace() - Complex(1.0)) > kTolExact)
    throw std::invalid_argument("density matrix must have unit trace");
  Eigen::SelfAdjointEigenSolver<Mat4> solver(rho_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kPsdEigenFloor)
    throw std::invalid_argument("density matrix must be positive semidefinite");
}

TwoQubitDensity TwoQubitDensity::pure(const Vec4& ket) {
  if (std::abs(ket.norm() - 1.0) > kTolExact)
    throw std::invalid_argument("pure state requires a unit vector");
  return TwoQubitDensity(ket * ket.adjoint());
}

DeviationState::DeviationState(const Mat4& delta) : delta_(delta) {
  if (!is_hermitian(delta_, kTolExact))
    throw std::invalid_argument("deviation matrix must be Hermitian");
  if (std::abs(delta_.trace()) > kTolExact)
    throw std::invalid_argument("deviation matrix must be traceless");
}

}  // namespace qsdc
