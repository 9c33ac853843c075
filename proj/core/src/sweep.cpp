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

#include "qsdc/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "qsdc/cloner.hpp"

namespace qsdc {

VerificationError::VerificationError(const std::string& message)
    : std::runtime_error(message) {}

namespace {

[[noreturn]] void fail_row(int n, int m, const std::string& what) {
  std::ostringstream msg;
  msg << "sweep row n=" << n << " m=" << m << ": " << what;
  throw VerificationError(msg.str());
}

void check_range(int n, int m, const char* label, double value,
                 double tol = kTolExact) {
  if (!(value >= -tol && value <= 1.0 + tol)) {
    std::ostringstream what;
    what << label << " out of [0, 1]: " << value;
    fail_row(n, m, what.str());
  }
}

std::string format_sig12(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value,
                                    std::chars_format::general, 12);
  return std::string(buf, result.ptr);
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, const SpinSystem& sys) {
  if (config.theta_steps < 1 || config.phi_steps < 1)
    throw std::invalid_argument("sweep requires at least one step per axis");
  sys.validate();
  const bool do_gate = config.level != SweepLevel::Pulse;
  const bool do_pulse = config.level != SweepLevel::Gate;

  SweepResult result;
  result.rows.reserve((config.theta_steps + 1) * config.phi_steps);
  double min_fid = std::numeric_limits<double>::infinity();
  double max_fid = -std::numeric_limits<double>::infinity();
  double max_residual = 0.0;

  for (int n = 0; n <= config.theta_steps; ++n) {
    const double theta = std::numbers::pi * n / config.theta_steps;
    for (int m = 0; m < config.phi_steps; ++m) {
      const double phi = 2.0 * std::numbers::pi * m / config.phi_steps;
      const InputState input(theta, phi);

      SweepRow row;
      row.n = n;
      row.m = m;
      row.theta = input.theta;
      row.phi = input.phi;
      row.entropy = entropy_theory(input.theta);
      row.fid_theory = fidelity_theory(input.theta);
      check_range(n, m, "entropy", row.entropy);
      check_range(n, m, "fid_theory", row.fid_theory);

      auto note_fidelity = [&](double f) {
        min_fid = std::min(min_fid, f);
        max_fid = std::max(max_fid, f);
      };
      note_fidelity(row.fid_theory);

      if (do_gate) {
        const CloneResult gate = clone(input);
        row.fid_gate_a = gate.fidelity_a;
        row.fid_gate_b = gate.fidelity_b;
        if (std::abs(gate.fidelity_a - gate.fidelity_b) > kTolExact)
          fail_row(n, m, "gate clone fidelities differ");
        if ((gate.clone_a - gate.clone_b).lpNorm<Eigen::Infinity>() >
            kTolExact)
          fail_row(n, m, "gate clone states differ");
        const double residual = std::abs(gate.fidelity_a - row.fid_theory);
        if (residual > kTolExact)
          fail_row(n, m, "gate fidelity disagrees with the closed form");
        max_residual = std::max(max_residual, residual);
        check_range(n, m, "fid_gate_a", gate.fidelity_a);
        check_range(n, m, "fid_gate_b", gate.fidelity_b);
        note_fidelity(gate.fidelity_a);
        note_fidelity(gate.fidelity_b);
      }

      if (do_pulse) {
        const CloneResult pulse =
            run_cloning_pulse_level(input, sys, config.noise);
        row.fid_pulse_a = pulse.fidelity_a;
        row.fid_pulse_b = pulse.fidelity_b;
        // Pulse-level values carry rounding amplified by 1/epsilon during
        // receiver normalization, so they get the chained tolerance.
        check_range(n, m, "fid_pulse_a", pulse.fidelity_a, kTolChained);
        check_range(n, m, "fid_pulse_b", pulse.fidelity_b, kTolChained);
        if (config.noise == NoiseMode::Off) {
          const double reference =
              do_gate ? *row.fid_gate_a : row.fid_theory;
          if (std::abs(pulse.fidelity_a - reference) > kTolChained ||
              std::abs(pulse.fidelity_b - reference) > kTolChained)
            fail_row(n, m, "pulse-level fidelity disagrees with gate level");
          if (!do_gate)
            max_residual = std::max(
                max_residual, std::abs(pulse.fidelity_a - row.fid_theory));
        }
        note_fidelity(pulse.fidelity_a);
        note_fidelity(pulse.fidelity_b);
      }

      result.rows.push_back(row);
    }
  }

  result.min_fidelity = min_fid;
  result.max_fidelity = max_fid;
  result.max_gate_theory_residual = max_residual;
  return result;
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "n,m,theta,phi,entropy,fid_theory,fid_gate_a,fid_gate_b,"
      "fid_pulse_a,fid_pulse_b\n";
  for (const SweepRow& row : rows) {
    out += std::to_string(row.n);
    out += ',';
    out += std::to_string(row.m);
    out += ',';
    out += format_sig12(row.theta);
    out += ',';
    out += format_sig12(row.phi);
    out += ',';
    out += format_sig12(row.entropy);
    out += ',';
    out += format_sig12(row.fid_theory);
    for (const auto& column :
         {row.fid_gate_a, row.fid_gate_b, row.fid_pulse_a, row.fid_pulse_b}) {
      out += ',';
      if (column) out += format_sig12(*column);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_config(const std::string& path, int lineno,
                              const std::string& what) {
  std::ostringstream msg;
  msg << path << ":" << lineno << ": " << what;
  throw std::invalid_argument(msg.str());
}

}  // namespace

SpinSystem load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);

  SpinSystem sys;
  bool ratio_given = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const std::string_view content = trim(line);
    if (content.empty()) continue;

    const auto eq = content.find('=');
    if (eq == std::string_view::npos)
      fail_config(path, lineno, "expected key=value");
    const std::string_view key = trim(content.substr(0, eq));
    const std::string_view value_text = trim(content.substr(eq + 1));

    double value = 0.0;
    const auto parsed = std::from_chars(
        value_text.data(), value_text.data() + value_text.size(), value);
    if (parsed.ec != std::errc() ||
        parsed.ptr != value_text.data() + value_text.size() ||
        !std::isfinite(value))
      fail_config(path, lineno,
                  "invalid numeric value '" + std::string(value_text) + "'");

    if (key == "omega_a")
      sys.omega_a = value;
    else if (key == "omega_b")
      sys.omega_b = value;
    else if (key == "j_coupling")
      sys.j_coupling = value;
    else if (key == "t1_a")
      sys.t1_a = value;
    else if (key == "t2_a")
      sys.t2_a = value;
    else if (key == "t1_b")
      sys.t1_b = value;
    else if (key == "t2_b")
      sys.t2_b = value;
    else if (key == "polarization_ratio") {
      sys.polarization_ratio = value;
      ratio_given = true;
    } else {
      fail_config(path, lineno, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!ratio_given) sys.polarization_ratio = sys.omega_b / sys.omega_a;
  sys.validate();
  return sys;
}

}  // namespace qsdc
