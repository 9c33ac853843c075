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

#include "qsdc/cloner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsdc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double checked_theta(double theta) {
  if (!std::isfinite(theta) || theta < -kTolExact || theta > kPi + kTolExact)
    throw std::invalid_argument("theta must lie in [0, pi]");
  return std::clamp(theta, 0.0, kPi);
}

}  // namespace

InputState::InputState(double theta_in, double phi_in)
    : theta(checked_theta(theta_in)) {
  if (!std::isfinite(phi_in))
    throw std::invalid_argument("phi must be finite");
  double r = std::fmod(phi_in, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod rounding can land exactly on 2 pi
  phi = r;
}

Hemisphere classify(double theta) {
  return theta <= 0.5 * kPi ? Hemisphere::North : Hemisphere::South;
}

Vec2 input_ket(const InputState& state) {
  const double half = 0.5 * state.theta;
  Vec2 ket;
  ket(0) = std::cos(half);
  ket(1) = std::exp(Complex(0.0, state.phi)) * std::sin(half);
  return ket;
}

Mat4 build_cloner(Hemisphere hemisphere) {
  const double r = 1.0 / std::numbers::sqrt2;
  Mat4 u = Mat4::Zero();
  if (hemisphere == Hemisphere::North) {
    u(0, 0) = 1;
    u(1, 1) = r;
    u(1, 2) = r;
    u(2, 1) = -r;
    u(2, 2) = r;
    u(3, 3) = 1;
  } else {
    u(0, 1) = 1;
    u(1, 0) = r;
    u(1, 3) = -r;
    u(2, 0) = r;
    u(2, 3) = r;
    u(3, 2) = 1;
  }
  return u;
}

CloneResult clone(const InputState& state) {
  const Vec2 psi = input_ket(state);
  Vec4 joint_in = Vec4::Zero();
  joint_in(basis_index(0, 0)) = psi(0);
  joint_in(basis_index(1, 0)) = psi(1);
  const Mat4 u = build_cloner(classify(state.theta));
  const Vec4 joint_out = u * joint_in;
  TwoQubitDensity joint = TwoQubitDensity::pure(joint_out);
  Mat2 clone_a = partial_trace(joint.matrix(), Spin::A);
  Mat2 clone_b = partial_trace(joint.matrix(), Spin::B);
  const double fid_a = std::real(psi.dot(clone_a * psi));
  const double fid_b = std::real(psi.dot(clone_b * psi));
  return CloneResult{std::move(joint), std::move(clone_a), std::move(clone_b),
                     fid_a, fid_b};
}

double fidelity_theory(double theta) {
  const double t = checked_theta(theta);
  const double half = 0.5 * t;
  const double s2 = std::sin(t) * std::sin(t);
  const double cross = 0.25 * std::numbers::sqrt2 * s2;
  if (t <= 0.5 * kPi) {
    const double c = std::cos(half);
    return 0.5 * std::sin(half) * std::sin(half) + c * c * c * c + cross;
  }
  const double s = std::sin(half);
  return 0.5 * std::cos(half) * std::cos(half) + s * s * s * s + cross;
}

double entropy_theory(double theta) {
  const double t = checked_theta(theta);
  // p = cos^2(theta/2) written via the half-angle identity so that
  // theta = pi/2 gives p = 1/2 without rounding.
  const double p = 0.5 * (1.0 + std::cos(t));
  double s = 0.0;
  if (p > 0.0) s -= p * std::log2(p);
  if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
  return s;
}

BlochVector bloch_of(const Mat2& rho) {
  if (!is_hermitian(rho, kTolChained) ||
      std::abs(rho.trace() - Complex(1.0)) > kTolChained)
    throw std::invalid_argument("bloch_of requires a unit-trace Hermitian input");
  BlochVector r;
  r.rx = std::real((rho * pauli_x()).trace());
  r.ry = std::real((rho * pauli_y()).trace());
  r.rz = std::real((rho * pauli_z()).trace());
  return r;
}

double bloch_fidelity(const BlochVector& reference, const BlochVector& actual) {
  const double norm = std::sqrt(reference.rx * reference.rx +
                                reference.ry * reference.ry +
                                reference.rz * reference.rz);
  if (std::abs(norm - 1.0) > kTolChained)
    throw std::invalid_argument("bloch_fidelity requires a unit reference");
  const double dot = reference.rx * actual.rx + reference.ry * actual.ry +
                     reference.rz * actual.rz;
  return 0.5 * (1.0 + dot);
}

BaselineConstants baseline_constants() {
  return BaselineConstants{5.0 / 6.0, 0.5 + 0.25 * std::numbers::sqrt2};
}

}  // namespace qsdc
