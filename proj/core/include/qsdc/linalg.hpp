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

#ifndef QSDC_LINALG_HPP_
#define QSDC_LINALG_HPP_

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace qsdc {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;

// Default tolerances. kTolExact is for quantities that are algebraically
// exact in double precision; kTolChained allows rounding accumulated over
// long compiled sequences.
inline constexpr double kTolExact = 1e-12;
inline constexpr double kTolChained = 1e-9;

// Two-qubit computational basis: |a b> with spin a the most significant
// bit, so |00>,|01>,|10>,|11> map to indices 0..3.
constexpr int basis_index(int bit_a, int bit_b) { return 2 * bit_a + bit_b; }
constexpr std::pair<int, int> basis_bits(int index) {
  return {(index >> 1) & 1, index & 1};
}

enum class Spin { A, B };

// Rotation axes; the Neg* values denote rotation about the reversed axis,
// R_{-u}(t) = R_u(-t).
enum class Axis { X, Y, Z, NegX, NegY, NegZ };

// Positive generator underlying a possibly negated axis.
Axis axis_generator(Axis axis);
// +1 for X/Y/Z, -1 for NegX/NegY/NegZ.
int axis_sign(Axis axis);

Mat2 identity2();
Mat4 identity4();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
// Signed Pauli operator: pauli(Axis::NegX) == -pauli_x().
Mat2 pauli(Axis axis);
Mat4 swap_gate();

// Kronecker product, factor for spin a first.
Mat4 kron(const Mat2& a, const Mat2& b);

// Reduced single-spin state. Requires unit trace of the input.
Mat2 partial_trace(const Mat4& rho, Spin keep);

// R_u(t) = exp(-i t sigma_u / 2) = cos(t/2) I - i sin(t/2) sigma_u.
Mat2 rotation(Axis axis, double angle);

// Scalar-coupling propagator exp(-i pi tau j sigma_z x sigma_z / 2),
// diagonal with phases -+a,+a,+a,-a for a = pi tau j / 2.
Mat4 zz_evolution(double tau, double j_hz);

bool is_unitary(const Mat2& u, double tol = kTolExact);
bool is_unitary(const Mat4& u, double tol = kTolExact);
bool is_hermitian(const Mat2& m, double tol = kTolExact);
bool is_hermitian(const Mat4& m, double tol = kTolExact);
bool is_psd(const Mat2& m, double tol = kTolExact);
bool is_psd(const Mat4& m, double tol = kTolExact);

// min over phases of ||u - e^{i phi} v||_F. Both inputs must be unitary.
double global_phase_distance(const Mat4& u, const Mat4& v);

}  // namespace qsdc

#endif  // QSDC_LINALG_HPP_
