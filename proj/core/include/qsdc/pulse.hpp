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

#ifndef QSDC_PULSE_HPP_
#define QSDC_PULSE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qsdc/linalg.hpp"

namespace qsdc {

// Pulse angle, stored either as an exact rational multiple of pi (kept exact
// so printed programs round-trip losslessly) or as decimal radians.
class Angle {
 public:
  // num/den * pi, gcd-reduced with den > 0. Throws on den == 0.
  static Angle pi_multiple(std::int64_t num, std::int64_t den = 1);
  static Angle radians(double value);

  bool is_pi_rational() const { return pi_rational_; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double radians() const;
  bool is_zero() const;

  Angle operator-() const;
  // Exact rational sum when both operands are pi-rational and the sum does
  // not overflow; decimal radians otherwise.
  friend Angle operator+(const Angle& lhs, const Angle& rhs);

  // Structural equality: kind and exact representation.
  friend bool operator==(const Angle& lhs, const Angle& rhs);
  friend bool operator!=(const Angle& lhs, const Angle& rhs) {
    return !(lhs == rhs);
  }

 private:
  Angle() = default;

  bool pi_rational_ = false;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double radians_ = 0.0;
};

struct RfPulse {
  Spin spin;
  Axis axis;
  Angle angle;

  friend bool operator==(const RfPulse&, const RfPulse&);
};

enum class DelayKind { Tau1, Tau2, Explicit };

struct Delay {
  DelayKind kind = DelayKind::Tau1;
  double seconds = 0.0;  // meaningful only for DelayKind::Explicit

  friend bool operator==(const Delay&, const Delay&);
};

struct Crusher {
  friend bool operator==(const Crusher&, const Crusher&) { return true; }
};

using PulseEvent = std::variant<RfPulse, Delay, Crusher>;

struct PulseProgram {
  std::string name;  // optional label, ignored by equality
  std::vector<PulseEvent> events;

  friend bool operator==(const PulseProgram& lhs, const PulseProgram& rhs) {
    return lhs.events == rhs.events;
  }
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Lexical, Syntax, Semantic };

  ParseError(Kind kind, std::size_t offset, std::size_t line,
             std::size_t column, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }  // 0-based byte offset
  std::size_t line() const { return line_; }      // 1-based
  std::size_t column() const { return column_; }  // 1-based

 private:
  Kind kind_;
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

// Grammar (events joined by '-', ';' or newline; '#' comments to end of line):
//   event := "R" ["-"] ("x"|"y"|"z") ":" ("a"|"b") "(" angle ")"
//          | "Gz" | "tau1" | "tau2" | "delay" "(" decimal ")"
//   angle := ["-"] ("pi" ["/" integer] | integer ["/" integer] "pi" | decimal)
PulseProgram parse(std::string_view text);

// Standalone angle in the same syntax; the whole string must match.
Angle parse_angle(std::string_view text);

// Canonical text; parse(print(p)) == p.
std::string print(const PulseProgram& program);
std::string print(const PulseEvent& event);

// Named sequences: prep_pp, north, south, frame_north, frame_south.
PulseProgram builtin_program(std::string_view name);

// Folds adjacent same-spin pulses about the same (possibly negated) axis by
// summing angles, dropping exact-zero pulses and zero-length explicit delays.
// Crusher and delay positions are preserved.
PulseProgram simplify(const PulseProgram& program);

}  // namespace qsdc

#endif  // QSDC_PULSE_HPP_
