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

#ifndef QSDC_DENSITY_HPP_
#define QSDC_DENSITY_HPP_

#include <stdexcept>

#include "qsdc/linalg.hpp"

namespace qsdc {

// Validated two-qubit density matrix: Hermitian, unit trace, positive
// semidefinite (eigenvalues allowed to dip to -1e-10 for rounding).
class TwoQubitDensity {
 public:
  explicit TwoQubitDensity(const Mat4& rho);

  static TwoQubitDensity pure(const Vec4& ket);

  const Mat4& matrix() const { return rho_; }

 private:
  Mat4 rho_;
};

// Traceless Hermitian deviation term, as produced by high-temperature
// expansion rho = I/4 + kappa * delta.
class DeviationState {
 public:
  explicit DeviationState(const Mat4& delta);

  const Mat4& matrix() const { return delta_; }

 private:
  Mat4 delta_;
};

}  // namespace qsdc

#endif  // QSDC_DENSITY_HPP_
