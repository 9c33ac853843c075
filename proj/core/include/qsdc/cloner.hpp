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

#ifndef QSDC_CLONER_HPP_
#define QSDC_CLONER_HPP_

#include "qsdc/density.hpp"
#include "qsdc/linalg.hpp"

namespace qsdc {

// Point on the Bloch sphere, |psi> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
// theta is clamped to [0, pi] (inputs may overshoot by <= 1e-12); phi is
// reduced to [0, 2 pi).
struct InputState {
  InputState(double theta_in, double phi_in);

  double theta;
  double phi;
};

enum class Hemisphere { North, South };

// Latitude band selector: theta <= pi/2 is North, otherwise South.
Hemisphere classify(double theta);

struct BlochVector {
  double rx = 0.0;
  double ry = 0.0;
  double rz = 0.0;
};

struct CloneResult {
  TwoQubitDensity joint;
  Mat2 clone_a;
  Mat2 clone_b;
  double fidelity_a = 0.0;
  double fidelity_b = 0.0;
};

// |psi(theta, phi)> on a single spin.
Vec2 input_ket(const InputState& state);

// The 1->2 symmetric cloning unitary for the given hemisphere, acting on
// |input>_a (x) |0>_b.
Mat4 build_cloner(Hemisphere hemisphere);

// Applies the hemisphere cloner matching the input latitude and reduces to
// both single-spin clones. Fidelities are <psi|rho_k|psi>.
CloneResult clone(const InputState& state);

// Closed-form cloning fidelity as a function of latitude only.
double fidelity_theory(double theta);

// Binary entropy of the latitude distribution weight p = (1 + cos theta)/2.
double entropy_theory(double theta);

// Bloch components r_u = tr(rho sigma_u).
BlochVector bloch_of(const Mat2& rho);

// F = (1 + r0 . r) / 2 for a unit reference vector r0.
double bloch_fidelity(const BlochVector& reference, const BlochVector& actual);

// Fixed comparison baselines: the universal machine bound and the
// phase-covariant machine bound for equatorial states.
struct BaselineConstants {
  double uqcm;
  double qpccm;
};

BaselineConstants baseline_constants();

}  // namespace qsdc

#endif  // QSDC_CLONER_HPP_
