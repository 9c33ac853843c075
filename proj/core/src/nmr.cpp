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

#include "qsdc/nmr.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qsdc {

void SpinSystem::validate() const {
  const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(omega_a) || !positive(omega_b) || !positive(j_coupling) ||
      !positive(t1_a) || !positive(t2_a) || !positive(t1_b) ||
      !positive(t2_b) || !positive(polarization_ratio))
    throw std::invalid_argument("spin system constants must be positive");
  if (t2_a > 2.0 * t1_a || t2_b > 2.0 * t1_b)
    throw std::invalid_argument("spin system requires t2 <= 2*t1 per spin");
}

CrusherNotUnitary::CrusherNotUnitary()
    : std::runtime_error(
          "program contains a gradient crusher and has no unitary form") {}

PrepVerificationFailure::PrepVerificationFailure(const std::string& message)
    : std::runtime_error(message) {}

namespace {

double delay_seconds(const Delay& delay, const SpinSystem& sys) {
  switch (delay.kind) {
    case DelayKind::Tau1:
      return sys.tau1();
    case DelayKind::Tau2:
      return sys.tau2();
    default:
      return delay.seconds;
  }
}

Mat4 single_spin_op(const Mat2& op, Spin spin) {
  return spin == Spin::A ? kron(op, identity2()) : kron(identity2(), op);
}

Mat4 pulse_unitary(const RfPulse& pulse) {
  return single_spin_op(rotation(pulse.axis, pulse.angle.radians()),
                        pulse.spin);
}

// Coherence order of each basis state: twice the total z quantum number,
// +1/2 per |0> and -1/2 per |1> spin.
constexpr std::array<int, 4> kQuantum = {1, 0, 0, -1};

Mat4 crusher_project(const Mat4& m) {
  Mat4 out = m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (kQuantum[i] != kQuantum[j]) out(i, j) = 0.0;
  return out;
}

// Damps the Pauli coefficients of m spin by spin: transverse components by
// e^{-tau/t2}, longitudinal by e^{-tau/t1}. The identity component is left
// alone, so the map fixes I/4 and preserves the trace.
Mat4 damp_pauli(const Mat4& m, double tau, const SpinSystem& sys) {
  const std::array<Mat2, 4> basis = {identity2(), pauli_x(), pauli_y(),
                                     pauli_z()};
  const auto factors = [tau](double t1, double t2) {
    const double transverse = std::exp(-tau / t2);
    const double longitudinal = std::exp(-tau / t1);
    return std::array<double, 4>{1.0, transverse, transverse, longitudinal};
  };
  const std::array<double, 4> fa = factors(sys.t1_a, sys.t2_a);
  const std::array<double, 4> fb = factors(sys.t1_b, sys.t2_b);
  Mat4 out = Mat4::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4 op = kron(basis[mu], basis[nu]);
      const Complex coeff = (op * m).trace() / 4.0;
      out += fa[mu] * fb[nu] * coeff * op;
    }
  return out;
}

Mat4 delay_channel(const Mat4& m, double tau, const SpinSystem& sys,
                   bool noisy) {
  const Mat4 damped = noisy ? damp_pauli(m, tau, sys) : m;
  const Mat4 u = zz_evolution(tau, sys.j_coupling);
  return u * damped * u.adjoint();
}

Mat4 run_events(Mat4 m, const PulseProgram& program, const SpinSystem& sys,
                NoiseMode noise) {
  for (const PulseEvent& event : program.events) {
    if (const auto* pulse = std::get_if<RfPulse>(&event)) {
      const Mat4 u = pulse_unitary(*pulse);
      m = u * m * u.adjoint();
    } else if (const auto* delay = std::get_if<Delay>(&event)) {
      m = delay_channel(m, delay_seconds(*delay, sys), sys,
                        noise == NoiseMode::Phenomenological);
    } else {
      m = crusher_project(m);
    }
  }
  return m;
}

}  // namespace

Mat4 compile_unitary(const PulseProgram& program, const SpinSystem& sys) {
  sys.validate();
  Mat4 u = identity4();
  for (const PulseEvent& event : program.events) {
    if (std::holds_alternative<Crusher>(event)) throw CrusherNotUnitary();
    if (const auto* pulse = std::get_if<RfPulse>(&event))
      u = pulse_unitary(*pulse) * u;
    else
      u = zz_evolution(delay_seconds(std::get<Delay>(event), sys),
                       sys.j_coupling) *
          u;
  }
  return u;
}

TwoQubitDensity apply_channel(const PulseProgram& program,
                              const TwoQubitDensity& rho,
                              const SpinSystem& sys, NoiseMode noise) {
  sys.validate();
  return TwoQubitDensity(run_events(rho.matrix(), program, sys, noise));
}

DeviationState apply_channel(const PulseProgram& program,
                             const DeviationState& delta,
                             const SpinSystem& sys, NoiseMode noise) {
  sys.validate();
  return DeviationState(run_events(delta.matrix(), program, sys, noise));
}

Mat4 crusher(const Mat4& rho) {
  if (!is_hermitian(rho, kTolChained))
    throw std::invalid_argument("crusher requires a Hermitian input");
  return crusher_project(rho);
}

PseudoPureResult prepare_pseudo_pure(const SpinSystem& sys) {
  sys.validate();
  const Mat4 delta0 =
      0.5 * kron(pauli_z(), identity2()) +
      0.5 * sys.polarization_ratio * kron(identity2(), pauli_z());
  const DeviationState final_dev = apply_channel(
      builtin_program("prep_pp"), DeviationState(delta0), sys, NoiseMode::Off);
  const Mat4& df = final_dev.matrix();

  // Proportionality target |00><00| - I/4 has populations (3,-1,-1,-1)/4;
  // the scale follows from the (0,0) entry.
  const double scale = std::real(df(0, 0)) / 0.75;
  Mat4 target = -0.25 * scale * Mat4::Identity();
  target(0, 0) += scale;
  const double mismatch = (df - target).lpNorm<Eigen::Infinity>();
  if (!(scale > 0.0) || mismatch >= kTolChained) {
    std::ostringstream msg;
    msg << "preparation did not reach a |00> pseudo-pure deviation "
        << "(max deviation from proportionality " << mismatch << ")";
    throw PrepVerificationFailure(msg.str());
  }

  const Mat4 rho_pp =
      0.25 * Mat4::Identity() + kThermalDeviationScale * df;
  return PseudoPureResult{TwoQubitDensity(rho_pp),
                          kThermalDeviationScale * scale,
                          final_dev};
}

TwoQubitDensity relax_delay(const TwoQubitDensity& rho, double tau,
                            const SpinSystem& sys) {
  if (!std::isfinite(tau) || tau < 0.0)
    throw std::invalid_argument("relax_delay requires tau >= 0");
  sys.validate();
  return TwoQubitDensity(delay_channel(rho.matrix(), tau, sys, true));
}

BlochVector readout_bloch(const TwoQubitDensity& rho, Spin spin) {
  const auto expectation = [&](const Mat2& op) {
    return std::real((rho.matrix() * single_spin_op(op, spin)).trace());
  };
  BlochVector r;
  r.rx = expectation(pauli_x());
  r.ry = expectation(pauli_y());
  r.rz = expectation(pauli_z());
  return r;
}

double readout_z_pulsed(const TwoQubitDensity& rho, Spin spin) {
  Mat4 m = crusher_project(rho.matrix());
  const Mat4 u =
      single_spin_op(rotation(Axis::Y, 0.5 * std::numbers::pi), spin);
  m = u * m * u.adjoint();
  return std::real((m * single_spin_op(pauli_x(), spin)).trace());
}

CloneResult run_cloning_pulse_level(const InputState& state,
                                    const SpinSystem& sys, NoiseMode noise) {
  sys.validate();
  const PseudoPureResult prep = prepare_pseudo_pure(sys);

  const Hemisphere hemisphere = classify(state.theta);
  const bool north = hemisphere == Hemisphere::North;
  PulseProgram sequence;
  sequence.name = "cloning";
  sequence.events.push_back(
      RfPulse{Spin::A, Axis::Y, Angle::radians(state.theta)});
  sequence.events.push_back(
      RfPulse{Spin::A, Axis::Z, Angle::radians(state.phi)});
  for (const char* part : {north ? "frame_north" : "frame_south",
                           north ? "north" : "south"}) {
    const PulseProgram piece = builtin_program(part);
    sequence.events.insert(sequence.events.end(), piece.events.begin(),
                           piece.events.end());
  }

  const TwoQubitDensity out = apply_channel(sequence, prep.rho_pp, sys, noise);

  // Receiver normalization: rescale the deviation back to a unit pseudo-pure
  // state. Dividing by epsilon amplifies roundoff by ~1/epsilon, so restore
  // exact Hermiticity and unit trace before revalidating.
  Mat4 eff = (out.matrix() - 0.25 * Mat4::Identity()) / prep.epsilon +
             0.25 * Mat4::Identity();
  eff = 0.5 * (eff + eff.adjoint());
  eff /= std::real(eff.trace());
  TwoQubitDensity joint(eff);

  Mat2 clone_a = partial_trace(joint.matrix(), Spin::A);
  Mat2 clone_b = partial_trace(joint.matrix(), Spin::B);

  const BlochVector reference{std::sin(state.theta) * std::cos(state.phi),
                              std::sin(state.theta) * std::sin(state.phi),
                              std::cos(state.theta)};
  const double fid_a = bloch_fidelity(reference, readout_bloch(joint, Spin::A));
  const double fid_b = bloch_fidelity(reference, readout_bloch(joint, Spin::B));
  return CloneResult{std::move(joint), std::move(clone_a), std::move(clone_b),
                     fid_a, fid_b};
}

}  // namespace qsdc
