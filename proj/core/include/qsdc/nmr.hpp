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

#ifndef QSDC_NMR_HPP_
#define QSDC_NMR_HPP_

#include <stdexcept>

#include "qsdc/cloner.hpp"
#include "qsdc/density.hpp"
#include "qsdc/linalg.hpp"
#include "qsdc/pulse.hpp"

namespace qsdc {

// Heteronuclear two-spin system in the doubly rotating frame: only the
// scalar coupling acts during delays. Times in seconds, frequencies in Hz.
struct SpinSystem {
  double omega_a = 100e6;
  double omega_b = 400e6;
  double j_coupling = 214.5;
  double t1_a = 17.2;
  double t2_a = 0.35;
  double t1_b = 4.8;
  double t2_b = 3.3;
  double polarization_ratio = 4.0;

  // All constants positive and t2 <= 2*t1 per spin; throws otherwise.
  void validate() const;

  double tau1() const { return 1.0 / (2.0 * j_coupling); }
  double tau2() const { return 1.0 / (4.0 * j_coupling); }
};

enum class NoiseMode { Off, Phenomenological };

// Scale of the thermal deviation in rho = I/4 + kappa * delta. Any positive
// value small enough to keep rho PSD works; the physical value is ~1e-5.
inline constexpr double kThermalDeviationScale = 1e-5;

class CrusherNotUnitary : public std::runtime_error {
 public:
  CrusherNotUnitary();
};

class PrepVerificationFailure : public std::runtime_error {
 public:
  explicit PrepVerificationFailure(const std::string& message);
};

// Product of the event propagators in execution order. Pulses are
// zero-duration single-spin rotations; delays evolve only the ZZ coupling.
// Throws CrusherNotUnitary if the program contains Gz.
Mat4 compile_unitary(const PulseProgram& program, const SpinSystem& sys);

// Runs the program on a state. Crusher events apply the coherence-order
// projection; with noise on, delays additionally damp per-spin components.
TwoQubitDensity apply_channel(const PulseProgram& program,
                              const TwoQubitDensity& rho,
                              const SpinSystem& sys,
                              NoiseMode noise = NoiseMode::Off);
DeviationState apply_channel(const PulseProgram& program,
                             const DeviationState& delta,
                             const SpinSystem& sys,
                             NoiseMode noise = NoiseMode::Off);

// Ideal z-gradient: zeroes every element whose total coherence order is
// nonzero, keeping the diagonal and the zero-quantum |01><10| pair.
// Requires a Hermitian input.
Mat4 crusher(const Mat4& rho);

struct PseudoPureResult {
  TwoQubitDensity rho_pp;
  double epsilon = 0.0;
  DeviationState deviation;
};

// Runs the preparation sequence on the thermal deviation
// sigma_z^a/2 + ratio * sigma_z^b/2 and verifies the result is proportional
// to |00><00| - I/4 before normalizing. Throws PrepVerificationFailure.
PseudoPureResult prepare_pseudo_pure(const SpinSystem& sys);

// Free evolution of duration tau with phenomenological damping: transverse
// components of spin k shrink by e^{-tau/t2_k}, longitudinal by
// e^{-tau/t1_k} (fixed point I/4), then the ZZ propagator acts.
TwoQubitDensity relax_delay(const TwoQubitDensity& rho, double tau,
                            const SpinSystem& sys);

// r_mu = tr(rho sigma_mu^spin).
BlochVector readout_bloch(const TwoQubitDensity& rho, Spin spin);

// Emulated z readout: crusher, then R_y(pi/2) on the spin, then x readout.
// Agrees with readout_bloch(...).rz for valid densities.
double readout_z_pulsed(const TwoQubitDensity& rho, Spin spin);

// Full pulse-level pipeline: pseudo-pure preparation, input encoding
// R_z(phi) R_y(theta) on spin a, frame program, hemisphere sequence, then
// clone readout on the epsilon-normalized deviation.
CloneResult run_cloning_pulse_level(const InputState& state,
                                    const SpinSystem& sys,
                                    NoiseMode noise = NoiseMode::Off);

}  // namespace qsdc

#endif  // QSDC_NMR_HPP_
