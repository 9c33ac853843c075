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

#ifndef QSDC_SWEEP_HPP_
#define QSDC_SWEEP_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsdc/nmr.hpp"

namespace qsdc {

enum class SweepLevel { Gate, Pulse, Both };

struct SweepConfig {
  int theta_steps = 12;  // theta = n*pi/theta_steps, n = 0..theta_steps
  int phi_steps = 8;     // phi = 2*pi*m/phi_steps, m = 0..phi_steps-1
  SweepLevel level = SweepLevel::Both;
  NoiseMode noise = NoiseMode::Off;
};

struct SweepRow {
  int n = 0;
  int m = 0;
  double theta = 0.0;
  double phi = 0.0;
  double entropy = 0.0;
  double fid_theory = 0.0;
  std::optional<double> fid_gate_a;
  std::optional<double> fid_gate_b;
  std::optional<double> fid_pulse_a;
  std::optional<double> fid_pulse_b;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double min_fidelity = 0.0;
  double max_fidelity = 0.0;
  double max_gate_theory_residual = 0.0;
};

// Internal cross-check failed (clone symmetry, closed-form agreement,
// pulse/gate equivalence, or a value out of range).
struct VerificationError : std::runtime_error {
  explicit VerificationError(const std::string& message);
};

// Runs the grid in lexicographic (n, m) order, cross-checking every row.
// Pulse/gate equivalence is enforced only with noise off.
SweepResult run_sweep(const SweepConfig& config, const SpinSystem& sys);

// Header n,m,theta,phi,entropy,fid_theory,fid_gate_a,fid_gate_b,
// fid_pulse_a,fid_pulse_b; 12 significant digits, LF line endings,
// absent level columns left empty. Byte-deterministic.
std::string to_csv(const std::vector<SweepRow>& rows);

// key=value SpinSystem overrides ('#' comments, blank lines ignored).
// Keys: omega_a, omega_b, j_coupling, t1_a, t2_a, t1_b, t2_b,
// polarization_ratio. Unknown keys or malformed values throw
// std::invalid_argument. polarization_ratio defaults to omega_b/omega_a
// when not given explicitly.
SpinSystem load_config(const std::string& path);

}  // namespace qsdc

#endif  // QSDC_SWEEP_HPP_
