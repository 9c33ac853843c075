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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "qsdc/linalg.hpp"
#include "test_util.hpp"

using namespace qsdc;
using qsdc_test::inf_norm;
using qsdc_test::random_complex;
using qsdc_test::random_density;
using qsdc_test::random_unitary;

namespace {

constexpr double kPi = std::numbers::pi;

Vec4 basis_ket(int index) {
  Vec4 v = Vec4::Zero();
  v(index) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("basis convention round-trips and orders qubit a first") {
  CHECK(basis_index(0, 0) == 0);
  CHECK(basis_index(0, 1) == 1);
  CHECK(basis_index(1, 0) == 2);
  CHECK(basis_index(1, 1) == 3);
  for (int i = 0; i < 4; ++i) {
    const auto [a, b] = basis_bits(i);
    CHECK(basis_index(a, b) == i);
  }
}

TEST_CASE("kron identity and sign structure") {
  CHECK(inf_norm(Mat4(kron(identity2(), identity2()) - identity4())) == 0.0);

  Mat4 zz_expected = Mat4::Zero();
  zz_expected(0, 0) = 1;
  zz_expected(1, 1) = -1;
  zz_expected(2, 2) = -1;
  zz_expected(3, 3) = 1;
  CHECK(inf_norm(Mat4(kron(pauli_z(), pauli_z()) - zz_expected)) == 0.0);

  // sigma_x on spin a maps |00> to |10>.
  const Vec4 mapped = kron(pauli_x(), identity2()) * basis_ket(0);
  CHECK((mapped - basis_ket(2)).norm() == 0.0);
}

TEST_CASE("kron is bilinear on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat2 a = random_complex<Mat2>(rng);
    const Mat2 a2 = random_complex<Mat2>(rng);
    const Mat2 b = random_complex<Mat2>(rng);
    CHECK(inf_norm(Mat4(kron(a + a2, b) - kron(a, b) - kron(a2, b))) <=
          kTolExact);
    CHECK(inf_norm(Mat4(kron(b, a + a2) - kron(b, a) - kron(b, a2))) <=
          kTolExact);
  }
}

TEST_CASE("partial trace recovers product factors") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat2 rho1 = random_density<Mat2>(rng);
    const Mat2 rho2 = random_density<Mat2>(rng);
    const Mat4 joint = kron(rho1, rho2);
    CHECK(inf_norm(Mat2(partial_trace(joint, Spin::A) - rho1)) <= kTolExact);
    CHECK(inf_norm(Mat2(partial_trace(joint, Spin::B) - rho2)) <= kTolExact);
  }
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
  Vec4 bell = Vec4::Zero();
  bell(0) = 1.0 / std::numbers::sqrt2;
  bell(3) = 1.0 / std::numbers::sqrt2;
  const Mat4 rho = bell * bell.adjoint();
  CHECK(inf_norm(Mat2(partial_trace(rho, Spin::A) - 0.5 * identity2())) <=
        kTolExact);
  CHECK(inf_norm(Mat2(partial_trace(rho, Spin::B) - 0.5 * identity2())) <=
        kTolExact);
}

TEST_CASE("partial trace preserves unit trace and rejects non-unit input") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat4 rho = random_density<Mat4>(rng);
    CHECK(std::abs(partial_trace(rho, Spin::A).trace() - Complex(1.0)) <=
          kTolExact);
    CHECK(std::abs(partial_trace(rho, Spin::B).trace() - Complex(1.0)) <=
          kTolExact);
  }
  CHECK_THROWS_AS(partial_trace(2.0 * Mat4(random_density<Mat4>(rng)),
                                Spin::A),
                  std::invalid_argument);
}

TEST_CASE("rotation closed forms") {
  // R_x(pi) = -i sigma_x
  CHECK(inf_norm(Mat2(rotation(Axis::X, kPi) -
                      Complex(0, -1) * pauli_x())) <= kTolExact);

  // R_y(pi/2)|0> = (|0> + |1>)/sqrt(2)
  Vec2 zero;
  zero << 1, 0;
  Vec2 plus;
  plus << 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
  CHECK((rotation(Axis::Y, 0.5 * kPi) * zero - plus).norm() <= kTolExact);

  // R_z(pi) = diag(e^{-i pi/2}, e^{i pi/2})
  Mat2 expected = Mat2::Zero();
  expected(0, 0) = std::exp(Complex(0, -0.5 * kPi));
  expected(1, 1) = std::exp(Complex(0, 0.5 * kPi));
  CHECK(inf_norm(Mat2(rotation(Axis::Z, kPi) - expected)) <= kTolExact);

  CHECK_THROWS_AS(rotation(Axis::X, std::nan("")), std::invalid_argument);
}

TEST_CASE("rotation about a negated axis reverses the angle") {
  std::mt19937 rng(14);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  const Axis negated[3] = {Axis::NegX, Axis::NegY, Axis::NegZ};
  const Axis positive[3] = {Axis::X, Axis::Y, Axis::Z};
  for (int trial = 0; trial < 50; ++trial) {
    const int which = trial % 3;
    const double angle = dist(rng);
    CHECK(inf_norm(Mat2(rotation(negated[which], angle) -
                        rotation(positive[which], -angle))) <= kTolExact);
  }
}

TEST_CASE("rotation additivity, unitarity and 4 pi periodicity") {
  std::mt19937 rng(15);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  const Axis axes[6] = {Axis::X,    Axis::Y,    Axis::Z,
                        Axis::NegX, Axis::NegY, Axis::NegZ};
  for (const Axis axis : axes) {
    for (int trial = 0; trial < 20; ++trial) {
      const double alpha = dist(rng);
      const double beta = dist(rng);
      CHECK(inf_norm(Mat2(rotation(axis, alpha) * rotation(axis, beta) -
                          rotation(axis, alpha + beta))) <= kTolExact);
      const Mat2 u = rotation(axis, alpha);
      CHECK(is_unitary(u, kTolExact));
      CHECK(std::abs(std::abs(u.determinant()) - 1.0) <= kTolExact);
    }
    CHECK(inf_norm(Mat2(rotation(axis, 4.0 * kPi) - identity2())) <=
          kTolExact);
  }
}

TEST_CASE("zz evolution closed form against elementwise exponentiation") {
  const double j = 214.5;
  CHECK(inf_norm(Mat4(zz_evolution(0.0, j) - identity4())) == 0.0);

  // Oracle: exponentiate the diagonal generator -i (pi tau J / 2) sz x sz
  // entry by entry.
  const auto oracle = [j](double tau) {
    const double diag[4] = {1.0, -1.0, -1.0, 1.0};
    Mat4 u = Mat4::Zero();
    for (int i = 0; i < 4; ++i)
      u(i, i) = std::exp(Complex(0.0, -0.5 * kPi * tau * j * diag[i]));
    return u;
  };
  const double tau1 = 1.0 / (2.0 * j);
  const double tau2 = 1.0 / (4.0 * j);
  CHECK(inf_norm(Mat4(zz_evolution(tau1, j) - oracle(tau1))) <= kTolExact);
  CHECK(inf_norm(Mat4(zz_evolution(tau2, j) - oracle(tau2))) <= kTolExact);

  // tau1 phases are exactly +-pi/4.
  const Mat4 u1 = zz_evolution(tau1, j);
  CHECK(std::abs(u1(0, 0) - std::exp(Complex(0, -0.25 * kPi))) <= kTolExact);
  CHECK(std::abs(u1(1, 1) - std::exp(Complex(0, 0.25 * kPi))) <= kTolExact);

  CHECK(inf_norm(Mat4(zz_evolution(tau1, j) * zz_evolution(tau1, j) -
                      zz_evolution(2.0 * tau1, j))) <= kTolExact);

  CHECK_THROWS_AS(zz_evolution(-1e-9, j), std::invalid_argument);
  CHECK_THROWS_AS(zz_evolution(tau1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(zz_evolution(tau1, -5.0), std::invalid_argument);
}

TEST_CASE("global phase distance basics") {
  std::mt19937 rng(16);
  const Mat4 u = random_unitary<Mat4>(rng);
  CHECK(global_phase_distance(u, u) <= kTolExact);
  const Complex phase = std::exp(Complex(0.0, kPi / 7.0));
  CHECK(global_phase_distance(u, Mat4(phase * u)) <= kTolExact);

  // Tr(SWAP) = 2, so the distance from the identity is sqrt(2*4 - 2*2) = 2.
  CHECK(std::abs(global_phase_distance(identity4(), swap_gate()) - 2.0) <=
        kTolExact);

  CHECK_THROWS_AS(global_phase_distance(Mat4(2.0 * identity4()), identity4()),
                  std::invalid_argument);
}

TEST_CASE("global phase distance agrees with the trace formula") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat4 u = random_unitary<Mat4>(rng);
    const Mat4 v = random_unitary<Mat4>(rng);
    const double formula =
        std::sqrt(8.0 - 2.0 * std::abs((u.adjoint() * v).trace()));
    CHECK(std::abs(global_phase_distance(u, v) - formula) <= kTolChained);
  }
}

TEST_CASE("global phase distance is symmetric and triangular") {
  std::mt19937 rng(18);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat4 u = random_unitary<Mat4>(rng);
    const Mat4 v = random_unitary<Mat4>(rng);
    const Mat4 w = random_unitary<Mat4>(rng);
    const double uv = global_phase_distance(u, v);
    const double vu = global_phase_distance(v, u);
    CHECK(std::abs(uv - vu) <= kTolChained);
    CHECK(uv <= global_phase_distance(u, w) + global_phase_distance(w, v) +
                    kTolChained);
  }
}

TEST_CASE("matrix predicates") {
  CHECK(is_unitary(swap_gate()));
  CHECK(is_hermitian(swap_gate()));
  CHECK(is_psd(Mat2(0.5 * identity2())));
  CHECK_FALSE(is_psd(pauli_z()));
  CHECK_FALSE(is_hermitian(Mat2(Complex(0, 1) * pauli_z())));
  std::mt19937 rng(19);
  const Mat4 rho = random_density<Mat4>(rng);
  CHECK(is_psd(rho, 1e-10));
  CHECK_FALSE(is_unitary(rho));
}
