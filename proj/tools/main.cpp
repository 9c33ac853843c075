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

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qsdc/cloner.hpp"
#include "qsdc/nmr.hpp"
#include "qsdc/pulse.hpp"
#include "qsdc/sweep.hpp"

namespace {

// Exit codes: 0 success, 1 pulse-program parse error, 2 verification or
// invariant failure, 3 invalid arguments / I/O trouble.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUsage = 3;

std::string fmt(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value,
                                    std::chars_format::general, 12);
  return std::string(buf, result.ptr);
}

std::string fmt(qsdc::Complex value) {
  std::string out = fmt(value.real());
  out += value.imag() < 0.0 ? "-" : "+";
  out += fmt(std::abs(value.imag()));
  out += "i";
  return out;
}

template <typename M>
void print_matrix(std::ostream& os, const M& m) {
  for (int i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) os << "  ";
      os << fmt(qsdc::Complex(m(i, j)));
    }
    os << "\n";
  }
}

void print_bloch(std::ostream& os, const char* label,
                 const qsdc::BlochVector& r) {
  os << label << " = (" << fmt(r.rx) << ", " << fmt(r.ry) << ", " << fmt(r.rz)
     << ")\n";
}

// Angle arguments share the pulse-language syntax ("pi/2", "3/4pi", decimal
// radians). A malformed angle is a usage error, not a program parse error.
double angle_argument(const std::string& name, const std::string& text) {
  try {
    return qsdc::parse_angle(text).radians();
  } catch (const qsdc::ParseError& e) {
    throw std::invalid_argument("invalid " + name + " '" + text +
                                "': " + e.what());
  }
}

qsdc::SpinSystem system_from(const std::string& config_path) {
  if (config_path.empty()) return qsdc::SpinSystem{};
  return qsdc::load_config(config_path);
}

qsdc::SweepLevel parse_level(const std::string& text) {
  if (text == "gate") return qsdc::SweepLevel::Gate;
  if (text == "pulse") return qsdc::SweepLevel::Pulse;
  return qsdc::SweepLevel::Both;
}

qsdc::NoiseMode parse_noise(const std::string& text) {
  return text == "phenomenological" ? qsdc::NoiseMode::Phenomenological
                                    : qsdc::NoiseMode::Off;
}

struct CloneArgs {
  std::string theta;
  std::string phi = "0";
  std::string level = "both";
  std::string noise = "off";
  std::string config;
};

int run_clone(const CloneArgs& args) {
  const qsdc::SpinSystem sys = system_from(args.config);
  const double theta = angle_argument("--theta", args.theta);
  const double phi = angle_argument("--phi", args.phi);
  const qsdc::InputState input(theta, phi);
  const qsdc::SweepLevel level = parse_level(args.level);
  const qsdc::NoiseMode noise = parse_noise(args.noise);

  std::ostream& os = std::cout;
  os << "input: theta = " << fmt(input.theta) << ", phi = " << fmt(input.phi)
     << " (" << (qsdc::classify(input.theta) == qsdc::Hemisphere::North
                     ? "north"
                     : "south")
     << " hemisphere)\n";
  os << "entropy = " << fmt(qsdc::entropy_theory(input.theta)) << "\n";
  os << "fidelity (closed form) = " << fmt(qsdc::fidelity_theory(input.theta))
     << "\n";
  const qsdc::BaselineConstants baselines = qsdc::baseline_constants();
  os << "baselines: uqcm = " << fmt(baselines.uqcm)
     << ", qpccm = " << fmt(baselines.qpccm) << "\n";

  if (level != qsdc::SweepLevel::Pulse) {
    const qsdc::CloneResult gate = qsdc::clone(input);
    os << "[gate] clone matrix:\n";
    print_matrix(os, gate.clone_a);
    print_bloch(os, "[gate] bloch a", qsdc::bloch_of(gate.clone_a));
    print_bloch(os, "[gate] bloch b", qsdc::bloch_of(gate.clone_b));
    os << "[gate] fidelity a = " << fmt(gate.fidelity_a)
       << ", b = " << fmt(gate.fidelity_b) << "\n";
  }
  if (level != qsdc::SweepLevel::Gate) {
    const qsdc::PseudoPureResult prep = qsdc::prepare_pseudo_pure(sys);
    const qsdc::CloneResult pulse =
        qsdc::run_cloning_pulse_level(input, sys, noise);
    os << "[pulse] epsilon = " << fmt(prep.epsilon) << "\n";
    print_bloch(os, "[pulse] bloch a",
                qsdc::readout_bloch(pulse.joint, qsdc::Spin::A));
    print_bloch(os, "[pulse] bloch b",
                qsdc::readout_bloch(pulse.joint, qsdc::Spin::B));
    os << "[pulse] fidelity a = " << fmt(pulse.fidelity_a)
       << ", b = " << fmt(pulse.fidelity_b) << "\n";
  }
  return kExitOk;
}

struct SweepArgs {
  int theta_steps = 12;
  int phi_steps = 8;
  std::string level = "both";
  std::string noise = "off";
  std::string out = "sweep.csv";
  std::string config;
};

int run_sweep_cmd(const SweepArgs& args) {
  const qsdc::SpinSystem sys = system_from(args.config);
  qsdc::SweepConfig config;
  config.theta_steps = args.theta_steps;
  config.phi_steps = args.phi_steps;
  config.level = parse_level(args.level);
  config.noise = parse_noise(args.noise);

  const qsdc::SweepResult result = qsdc::run_sweep(config, sys);
  const std::string csv = qsdc::to_csv(result.rows);
  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + args.out);
  out << csv;
  out.close();
  if (!out) throw std::invalid_argument("failed writing output: " + args.out);

  std::cout << "rows = " << result.rows.size()
            << ", min fidelity = " << fmt(result.min_fidelity)
            << ", max fidelity = " << fmt(result.max_fidelity)
            << ", max |simulated - theory| = "
            << fmt(result.max_gate_theory_residual) << "\n"
            << "wrote " << args.out << "\n";
  return kExitOk;
}

struct CompileArgs {
  std::string source;
  std::string check;
  std::string frame = "auto";
  std::string config;
};

qsdc::PulseProgram load_program(const std::string& source) {
  constexpr std::string_view kBuiltinPrefix = "builtin:";
  if (source.rfind(kBuiltinPrefix, 0) == 0)
    return qsdc::builtin_program(source.substr(kBuiltinPrefix.size()));
  std::ifstream in(source, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open program file: " + source);
  std::ostringstream text;
  text << in.rdbuf();
  return qsdc::parse(text.str());
}

int run_compile(const CompileArgs& args) {
  const qsdc::SpinSystem sys = system_from(args.config);
  const qsdc::PulseProgram program = load_program(args.source);

  qsdc::PulseProgram staged = program;
  if (!args.check.empty() && args.frame == "auto") {
    const qsdc::PulseProgram frame = qsdc::builtin_program(
        args.check == "north" ? "frame_north" : "frame_south");
    staged.events.insert(staged.events.begin(), frame.events.begin(),
                         frame.events.end());
  }

  const qsdc::Mat4 compiled = qsdc::compile_unitary(staged, sys);
  std::cout << "program: " << qsdc::print(program) << "\n";
  if (staged.events.size() != program.events.size())
    std::cout << "frame: " << (args.check == "north" ? "frame_north" : "frame_south")
              << " prepended\n";
  std::cout << "compiled unitary:\n";
  print_matrix(std::cout, compiled);

  if (args.check.empty()) return kExitOk;
  const qsdc::Mat4 target =
      qsdc::build_cloner(args.check == "north" ? qsdc::Hemisphere::North
                                               : qsdc::Hemisphere::South);
  const double distance = qsdc::global_phase_distance(compiled, target);
  const bool pass = distance < qsdc::kTolChained;
  std::cout << "check " << args.check
            << ": global-phase distance = " << fmt(distance)
            << " (tolerance " << fmt(qsdc::kTolChained) << "): "
            << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitOk : kExitVerification;
}

int run_prep(const std::string& config) {
  const qsdc::SpinSystem sys = system_from(config);
  const qsdc::PseudoPureResult result = qsdc::prepare_pseudo_pure(sys);
  std::cout << "deviation populations:";
  for (int i = 0; i < 4; ++i)
    std::cout << " " << fmt(std::real(result.deviation.matrix()(i, i)));
  std::cout << "\nepsilon = " << fmt(result.epsilon) << "\n"
            << "pseudo-pure preparation: PASS\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit state-dependent cloning simulator"};
  app.require_subcommand(1);

  CloneArgs clone_args;
  CLI::App* cmd_clone =
      app.add_subcommand("clone", "Run a single cloning instance");
  cmd_clone->add_option("--theta", clone_args.theta, "Polar angle in [0, pi]")
      ->required();
  cmd_clone->add_option("--phi", clone_args.phi, "Azimuthal angle");
  cmd_clone->add_option("--level", clone_args.level, "Simulation level")
      ->check(CLI::IsMember({"gate", "pulse", "both"}));
  cmd_clone->add_option("--noise", clone_args.noise, "Noise model")
      ->check(CLI::IsMember({"off", "phenomenological"}));
  cmd_clone->add_option("--config", clone_args.config, "Spin-system config");

  SweepArgs sweep_args;
  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "Sweep the (theta, phi) grid to CSV");
  cmd_sweep->add_option("--theta-steps", sweep_args.theta_steps,
                        "theta = n*pi/steps, n = 0..steps")
      ->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--phi-steps", sweep_args.phi_steps,
                        "phi = 2*pi*m/steps, m = 0..steps-1")
      ->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--level", sweep_args.level, "Simulation level")
      ->check(CLI::IsMember({"gate", "pulse", "both"}));
  cmd_sweep->add_option("--noise", sweep_args.noise, "Noise model")
      ->check(CLI::IsMember({"off", "phenomenological"}));
  cmd_sweep->add_option("--out", sweep_args.out, "Output CSV path");
  cmd_sweep->add_option("--config", sweep_args.config, "Spin-system config");

  CompileArgs compile_args;
  CLI::App* cmd_compile = app.add_subcommand(
      "compile", "Compile a pulse program to a unitary and verify it");
  cmd_compile
      ->add_option("source", compile_args.source,
                   "Program file, or builtin:<name>")
      ->required();
  cmd_compile->add_option("--check", compile_args.check, "Verification target")
      ->check(CLI::IsMember({"north", "south"}));
  cmd_compile->add_option("--frame", compile_args.frame,
                          "Prepend the matching z-frame program")
      ->check(CLI::IsMember({"auto", "none"}));
  cmd_compile->add_option("--config", compile_args.config,
                          "Spin-system config");

  std::string prep_config;
  CLI::App* cmd_prep =
      app.add_subcommand("prep", "Verify pseudo-pure state preparation");
  cmd_prep->add_option("--config", prep_config, "Spin-system config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_clone->parsed()) return run_clone(clone_args);
    if (cmd_sweep->parsed()) return run_sweep_cmd(sweep_args);
    if (cmd_compile->parsed()) return run_compile(compile_args);
    if (cmd_prep->parsed()) return run_prep(prep_config);
  } catch (const qsdc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qsdc::VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const qsdc::PrepVerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const qsdc::CrusherNotUnitary& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
