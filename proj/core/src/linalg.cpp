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

#include "qsdc/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsdc {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

Axis axis_generator(Axis axis) {
  switch (axis) {
    case Axis::X:
    case Axis::NegX:
      return Axis::X;
    case Axis::Y:
    case Axis::NegY:
      return Axis::Y;
    case Axis::Z:
    case Axis::NegZ:
      return Axis::Z;
  }
  throw std::invalid_argument("unknown axis");
}

int axis_sign(Axis axis) {
  switch (axis) {
    case Axis::X:
    case Axis::Y:
    case Axis::Z:
      return 1;
    case Axis::NegX:
    case Axis::NegY:
    case Axis::NegZ:
      return -1;
  }
  throw std::invalid_argument("unknown axis");
}

Mat2 identity2() { return Mat2::Identity(); }

Mat4 identity4() { return Mat4::Identity(); }

Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}

Mat2 pauli_y() {
  Mat2 m;
  m << 0, -kI, kI, 0;
  return m;
}

Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

Mat2 pauli(Axis axis) {
  Mat2 base;
  switch (axis_generator(axis)) {
    case Axis::X:
      base = pauli_x();
      break;
    case Axis::Y:
      base = pauli_y();
      break;
    default:
      base = pauli_z();
      break;
  }
  return axis_sign(axis) > 0 ? base : Mat2(-base);
}

Mat4 swap_gate() {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat2 partial_trace(const Mat4& rho, Spin keep) {
  if (std::abs(rho.trace() - Complex(1.0)) > kTolExact)
    throw std::invalid_argument("partial_trace requires unit trace input");
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        if (keep == Spin::A)
          out(i, j) += rho(basis_index(i, k), basis_index(j, k));
        else
          out(i, j) += rho(basis_index(k, i), basis_index(k, j));
      }
  return out;
}

Mat2 rotation(Axis axis, double angle) {
  if (!std::isfinite(angle))
    throw std::invalid_argument("rotation angle must be finite");
  const double half = 0.5 * angle;
  return Mat2(std::cos(half) * Mat2::Identity() -
              kI * std::sin(half) * pauli(axis));
}

Mat4 zz_evolution(double tau, double j_hz) {
  if (!std::isfinite(tau) || tau < 0.0)
    throw std::invalid_argument("zz_evolution requires tau >= 0");
  if (!std::isfinite(j_hz) || j_hz <= 0.0)
    throw std::invalid_argument("zz_evolution requires J > 0");
  const double alpha = 0.5 * std::numbers::pi * tau * j_hz;
  const Complex same = std::exp(-kI * alpha);      // |00>, |11>
  const Complex opposite = std::exp(kI * alpha);   // |01>, |10>
  Mat4 out = Mat4::Zero();
  out(0, 0) = same;
  out(1, 1) = opposite;
  out(2, 2) = opposite;
  out(3, 3) = same;
  return out;
}

namespace {

template <typename M>
bool is_unitary_impl(const M& u, double tol) {
  return (u.adjoint() * u - M::Identity()).template lpNorm<Eigen::Infinity>() <=
         tol;
}

template <typename M>
bool is_hermitian_impl(const M& m, double tol) {
  return (m - m.adjoint()).template lpNorm<Eigen::Infinity>() <= tol;
}

template <typename M>
bool is_psd_impl(const M& m, double tol) {
  if (!is_hermitian_impl(m, tol)) return false;
  Eigen::SelfAdjointEigenSolver<M> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

}  // namespace

bool is_unitary(const Mat2& u, double tol) { return is_unitary_impl(u, tol); }
bool is_unitary(const Mat4& u, double tol) { return is_unitary_impl(u, tol); }
bool is_hermitian(const Mat2& m, double tol) {
  return is_hermitian_impl(m, tol);
}
bool is_hermitian(const Mat4& m, double tol) {
  return is_hermitian_impl(m, tol);
}
bool is_psd(const Mat2& m, double tol) { return is_psd_impl(m, tol); }
bool is_psd(const Mat4& m, double tol) { return is_psd_impl(m, tol); }

double global_phase_distance(const Mat4& u, const Mat4& v) {
  if (!is_unitary(u, kTolChained) || !is_unitary(v, kTolChained))
    throw std::invalid_argument("global_phase_distance requires unitaries");
  // ||u - e^{i phi} v||^2 = 2d - 2 Re(e^{i phi} tr(u^dag v)) is minimized at
  // e^{i phi} = conj(t)/|t|. Evaluating the norm at the optimal phase instead
  // of using sqrt(2d - 2|t|) avoids catastrophic cancellation near zero.
  const Complex t = (u.adjoint() * v).trace();
  const double mag = std::abs(t);
  const Complex phase = mag > 1e-14 ? Complex(std::conj(t) / mag) : Complex(1.0);
  return (u - phase * v).norm();
}

}  // namespace qsdc
