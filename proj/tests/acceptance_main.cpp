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
//
// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here, next to each check.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsdc/cloner.hpp"
#include "qsdc/density.hpp"
#include "qsdc/linalg.hpp"
#include "qsdc/nmr.hpp"
#include "qsdc/pulse.hpp"
#include "qsdc/sweep.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qsdc;

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int index, const std::string& label, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << index << ". " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

double inf_norm2(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

// Closed-form clone state, recomputed here so the acceptance run does not
// trust the library's own matrices.
Mat2 reference_clone(double theta, double phi) {
  const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
  const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
  const Complex off = (1.0 / (2.0 * std::numbers::sqrt2)) * std::sin(theta) *
                      std::exp(Complex(0.0, -phi));
  Mat2 rho;
  if (theta <= 0.5 * kPi) {
    rho << c2 + 0.5 * s2, off, std::conj(off), 0.5 * s2;
  } else {
    rho << 0.5 * c2, off, std::conj(off), 0.5 * c2 + s2;
  }
  return rho;
}

double reference_fidelity(double theta, double phi) {
  const Vec2 psi = input_ket(InputState(theta, phi));
  return (psi.adjoint() * reference_clone(theta, phi) * psi)(0, 0).real();
}

double forced_hemisphere_fidelity(Hemisphere hemisphere, double theta,
                                  double phi) {
  const Vec2 psi = input_ket(InputState(theta, phi));
  Vec4 joint = Vec4::Zero();
  joint(basis_index(0, 0)) = psi(0);
  joint(basis_index(1, 0)) = psi(1);
  const Vec4 out = build_cloner(hemisphere) * joint;
  const Mat2 clone =
      partial_trace(TwoQubitDensity::pure(out).matrix(), Spin::A);
  return std::real(psi.dot(clone * psi));
}

PulseProgram concat(const PulseProgram& first, const PulseProgram& second) {
  PulseProgram out = first;
  out.events.insert(out.events.end(), second.events.begin(),
                    second.events.end());
  return out;
}

fs::path temp_path(const std::string& suffix) {
  static int counter = 0;
  return fs::temp_directory_path() /
         ("qsdc_acceptance_" + std::to_string(counter++) + suffix);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const fs::path out_path = temp_path(".out");
  const std::string command = std::string("\"") + QSDC_CLI_BINARY + "\" " +
                              args + " > \"" + out_path.string() + "\" 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = slurp(out_path);
  std::error_code ec;
  fs::remove(out_path, ec);
  return result;
}

std::string format_double(double value) {
  std::ostringstream out;
  out.precision(15);
  out << value;
  return out.str();
}

}  // namespace

int main() {
  const SpinSystem sys;
  const SweepConfig default_config;  // 13 x 8 grid, both levels, noise off
  const SweepResult sweep = run_sweep(default_config, sys);

  // 1. Fidelity constants and the grid-wide floor.
  {
    const double equator = fidelity_theory(0.5 * kPi);
    const bool constants = std::abs(equator - 0.8535533906) <= 1e-9 &&
                           std::abs(fidelity_theory(0.0) - 1.0) <= 1e-12 &&
                           std::abs(fidelity_theory(kPi) - 1.0) <= 1e-12;
    const bool floor = sweep.min_fidelity >= 0.8535533906 - 1e-9 &&
                       sweep.min_fidelity > 5.0 / 6.0;
    report(1, "fidelity constants and grid floor", constants && floor,
           "min over grid = " + format_double(sweep.min_fidelity));
  }

  // 2. Gate-level simulation matches the closed-form clones on the full grid.
  {
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) {
      for (int m = 0; m < 8; ++m) {
        const double theta = kPi * n / 12.0;
        const double phi = 2.0 * kPi * m / 8.0;
        const CloneResult gate = clone(InputState(theta, phi));
        const Mat2 reference = reference_clone(theta, phi);
        worst = std::max(worst, inf_norm2(Mat2(gate.clone_a - reference)));
        worst = std::max(worst, inf_norm2(Mat2(gate.clone_b - reference)));
        worst = std::max(
            worst, std::abs(gate.fidelity_a - reference_fidelity(theta, phi)));
      }
    }
    report(2, "gate level matches the closed-form clone states",
           worst <= 1e-12, "max deviation = " + format_double(worst));
  }

  // 3. Clone symmetry and phase independence of the fidelity.
  {
    double worst_pair = 0.0;
    double worst_spread = 0.0;
    for (int n = 0; n <= 12; ++n) {
      double fid_min = 1.0;
      double fid_max = 0.0;
      for (int m = 0; m < 8; ++m) {
        const CloneResult gate =
            clone(InputState(kPi * n / 12.0, 2.0 * kPi * m / 8.0));
        worst_pair = std::max(
            worst_pair, inf_norm2(Mat2(gate.clone_a - gate.clone_b)));
        fid_min = std::min(fid_min, gate.fidelity_a);
        fid_max = std::max(fid_max, gate.fidelity_a);
      }
      worst_spread = std::max(worst_spread, fid_max - fid_min);
    }
    report(3, "clone symmetry and phase independence",
           worst_pair <= 1e-12 && worst_spread < 1e-12,
           "max clone mismatch = " + format_double(worst_pair) +
               ", max phase spread = " + format_double(worst_spread));
  }

  // 4. Mirror symmetry in latitude and agreement at the equator seam.
  {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> dist(0.0, kPi);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const double theta = dist(rng);
      worst = std::max(worst, std::abs(fidelity_theory(theta) -
                                       fidelity_theory(kPi - theta)));
    }
    const double seam =
        std::abs(forced_hemisphere_fidelity(Hemisphere::North, 0.5 * kPi, 0.3) -
                 forced_hemisphere_fidelity(Hemisphere::South, 0.5 * kPi, 0.3));
    report(4, "hemisphere mirror symmetry and equator seam",
           worst <= 1e-12 && seam <= 1e-12,
           "max |F(theta)-F(pi-theta)| = " + format_double(worst) +
               ", seam gap = " + format_double(seam));
  }

  // 5. Entropy endpoints and the monotone entropy/fidelity trade-off.
  {
    bool ok = entropy_theory(0.0) == 0.0 && entropy_theory(0.5 * kPi) == 1.0;
    for (int n = 1; n <= 6 && ok; ++n) {
      const double theta_prev = kPi * (n - 1) / 12.0;
      const double theta = kPi * n / 12.0;
      ok = entropy_theory(theta) > entropy_theory(theta_prev) &&
           fidelity_theory(theta) < fidelity_theory(theta_prev);
    }
    report(5, "entropy endpoints and monotone trade-off", ok);
  }

  // 6. Hemisphere sequences compile to the cloner unitaries (frames matter).
  {
    const double north = global_phase_distance(
        compile_unitary(
            concat(builtin_program("frame_north"), builtin_program("north")),
            sys),
        build_cloner(Hemisphere::North));
    const double south = global_phase_distance(
        compile_unitary(
            concat(builtin_program("frame_south"), builtin_program("south")),
            sys),
        build_cloner(Hemisphere::South));
    const double north_unframed = global_phase_distance(
        compile_unitary(builtin_program("north"), sys),
        build_cloner(Hemisphere::North));
    const double south_unframed = global_phase_distance(
        compile_unitary(builtin_program("south"), sys),
        build_cloner(Hemisphere::South));
    report(6, "pulse sequences compile to the cloner unitaries",
           north < 1e-9 && south < 1e-9 && north_unframed >= 1e-3 &&
               south_unframed >= 1e-3,
           "framed distances " + format_double(north) + " / " +
               format_double(south) + ", unframed " +
               format_double(north_unframed) + " / " +
               format_double(south_unframed));
  }

  // 7. Pseudo-pure preparation populations proportional to (3, -1, -1, -1).
  {
    const PseudoPureResult prep = prepare_pseudo_pure(sys);
    const Mat4& dev = prep.deviation.matrix();
    const double scale = std::real(dev(0, 0)) / 0.75;
    const double targets[4] = {0.75, -0.25, -0.25, -0.25};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const Complex expected =
            i == j ? Complex(scale * targets[i]) : Complex(0.0);
        worst = std::max(worst, std::abs(dev(i, j) - expected));
      }
    report(7, "pseudo-pure preparation populations",
           scale > 0.0 && worst <= 1e-9,
           "scale = " + format_double(scale) +
               ", max deviation = " + format_double(worst));
  }

  // 8. Pulse-level pipeline reproduces gate-level fidelities on the grid.
  {
    int matching = 0;
    double worst = 0.0;
    for (const SweepRow& row : sweep.rows) {
      const bool complete = row.fid_gate_a && row.fid_gate_b &&
                            row.fid_pulse_a && row.fid_pulse_b;
      const double gap = complete
                             ? std::max(std::abs(*row.fid_pulse_a - *row.fid_gate_a),
                                        std::abs(*row.fid_pulse_b - *row.fid_gate_b))
                             : 1.0;
      worst = std::max(worst, gap);
      if (complete && gap <= 1e-9) ++matching;
    }
    std::ostringstream detail;
    detail << matching << " of " << sweep.rows.size()
           << " rows, max gap = " << format_double(worst);
    report(8, "pulse level matches gate level across the grid",
           matching == 104 && sweep.rows.size() == 104, detail.str());
  }

  // 9. The squared north cloner has swap magnitudes entrywise.
  {
    const Mat4 un = build_cloner(Hemisphere::North);
    const Mat4 squared = un * un;
    const Mat4 swap = swap_gate();
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        worst = std::max(worst, std::abs(std::abs(squared(i, j)) -
                                         std::abs(swap(i, j))));
    report(9, "squared north cloner matches swap magnitudes", worst <= 1e-12,
           "max magnitude gap = " + format_double(worst));
  }

  // 10. Parser round-trip plus the parse-error exit-code contract.
  {
    bool builtins_ok = true;
    for (const char* name :
         {"prep_pp", "north", "south", "frame_north", "frame_south"}) {
      const PulseProgram program = builtin_program(name);
      builtins_ok = builtins_ok && parse(print(program)) == program;
    }

    std::mt19937 rng(99);
    std::uniform_int_distribution<int> event_kind(0, 9);
    std::uniform_int_distribution<int> event_count(0, 12);
    std::uniform_int_distribution<int> num_dist(-12, 12);
    std::uniform_int_distribution<std::int64_t> den_dist(1, 12);
    std::uniform_real_distribution<double> radian_dist(-2.0 * kPi, 2.0 * kPi);
    std::uniform_real_distribution<double> delay_dist(0.0, 0.01);
    const Axis axes[6] = {Axis::X,    Axis::Y,    Axis::Z,
                          Axis::NegX, Axis::NegY, Axis::NegZ};
    bool random_ok = true;
    for (int trial = 0; trial < 1000 && random_ok; ++trial) {
      PulseProgram program;
      const int n = event_count(rng);
      for (int i = 0; i < n; ++i) {
        switch (event_kind(rng)) {
          case 0:
            program.events.push_back(Crusher{});
            break;
          case 1:
            program.events.push_back(Delay{DelayKind::Tau1, 0.0});
            break;
          case 2:
            program.events.push_back(Delay{DelayKind::Tau2, 0.0});
            break;
          case 3:
            program.events.push_back(
                Delay{DelayKind::Explicit, delay_dist(rng)});
            break;
          default:
            program.events.push_back(RfPulse{
                event_kind(rng) % 2 == 0 ? Spin::A : Spin::B,
                axes[event_kind(rng) % 6],
                event_kind(rng) < 7
                    ? Angle::pi_multiple(num_dist(rng), den_dist(rng))
                    : Angle::radians(radian_dist(rng))});
            break;
        }
      }
      random_ok = parse(print(program)) == program;
    }

    const fs::path bad_path = temp_path(".pulse");
    {
      std::ofstream out(bad_path, std::ios::binary);
      out << "Rq:b(pi/3)\n";
    }
    const RunResult bad = run_cli("compile \"" + bad_path.string() + "\"");
    std::error_code ec;
    fs::remove(bad_path, ec);
    const bool cli_ok =
        bad.exit_code == 1 &&
        bad.output.find("line 1, column 2 (offset 1)") != std::string::npos;

    report(10, "parser round-trip and parse-error exit contract",
           builtins_ok && random_ok && cli_ok,
           std::string("builtins ") + (builtins_ok ? "ok" : "bad") +
               ", random programs " + (random_ok ? "ok" : "bad") +
               ", malformed-input exit = " + std::to_string(bad.exit_code));
  }

  // 11. Repeated sweep runs emit byte-identical CSV.
  {
    const fs::path first = temp_path(".csv");
    const fs::path second = temp_path(".csv");
    const RunResult r1 = run_cli("sweep --out \"" + first.string() + "\"");
    const RunResult r2 = run_cli("sweep --out \"" + second.string() + "\"");
    const std::string csv1 = slurp(first);
    const std::string csv2 = slurp(second);
    std::error_code ec;
    fs::remove(first, ec);
    fs::remove(second, ec);
    const bool ok = r1.exit_code == 0 && r2.exit_code == 0 &&
                    !csv1.empty() && csv1 == csv2;
    report(11, "repeated sweeps emit byte-identical csv", ok,
           "bytes = " + std::to_string(csv1.size()));
  }

  if (g_failures == 0) {
    std::cout << "all 11 acceptance criteria passed\n";
    return EXIT_SUCCESS;
  }
  std::cout << g_failures << " acceptance criteria failed\n";
  return EXIT_FAILURE;
}
