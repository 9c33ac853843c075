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

#include "qsdc/pulse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

namespace qsdc {

namespace {

using I128 = __int128;
using U128 = unsigned __int128;

U128 umag128(I128 v) { return v < 0 ? U128(0) - U128(v) : U128(v); }

U128 gcd128(U128 a, U128 b) {
  while (b != 0) {
    U128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr I128 kInt64Min = I128(INT64_MIN);
constexpr I128 kInt64Max = I128(INT64_MAX);

std::optional<std::pair<std::int64_t, std::int64_t>> normalize_rational(
    I128 num, I128 den) {
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) den = 1;
  const U128 g = gcd128(umag128(num), U128(den));
  if (g > 1) {
    num /= I128(g);
    den /= I128(g);
  }
  if (num < kInt64Min || num > kInt64Max || den > kInt64Max)
    return std::nullopt;
  return std::make_pair(std::int64_t(num), std::int64_t(den));
}

}  // namespace

Angle Angle::pi_multiple(std::int64_t num, std::int64_t den) {
  const auto reduced = normalize_rational(I128(num), I128(den));
  if (!reduced) throw std::invalid_argument("invalid rational pi multiple");
  Angle a;
  a.pi_rational_ = true;
  a.num_ = reduced->first;
  a.den_ = reduced->second;
  return a;
}

Angle Angle::radians(double value) {
  if (!std::isfinite(value))
    throw std::invalid_argument("angle must be finite");
  Angle a;
  a.pi_rational_ = false;
  a.radians_ = value;
  return a;
}

double Angle::radians() const {
  if (!pi_rational_) return radians_;
  return static_cast<double>(num_) * std::numbers::pi /
         static_cast<double>(den_);
}

bool Angle::is_zero() const {
  return pi_rational_ ? num_ == 0 : radians_ == 0.0;
}

Angle Angle::operator-() const {
  if (pi_rational_) {
    const auto reduced = normalize_rational(-I128(num_), I128(den_));
    if (reduced) {
      Angle a;
      a.pi_rational_ = true;
      a.num_ = reduced->first;
      a.den_ = reduced->second;
      return a;
    }
    return radians(-radians());
  }
  return radians(-radians_);
}

Angle operator+(const Angle& lhs, const Angle& rhs) {
  if (lhs.pi_rational_ && rhs.pi_rational_) {
    const I128 num = I128(lhs.num_) * I128(rhs.den_) +
                     I128(rhs.num_) * I128(lhs.den_);
    const I128 den = I128(lhs.den_) * I128(rhs.den_);
    if (const auto reduced = normalize_rational(num, den)) {
      Angle a;
      a.pi_rational_ = true;
      a.num_ = reduced->first;
      a.den_ = reduced->second;
      return a;
    }
  }
  return Angle::radians(lhs.radians() + rhs.radians());
}

bool operator==(const Angle& lhs, const Angle& rhs) {
  if (lhs.pi_rational_ != rhs.pi_rational_) return false;
  if (lhs.pi_rational_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  return lhs.radians_ == rhs.radians_;
}

bool operator==(const RfPulse& lhs, const RfPulse& rhs) {
  return lhs.spin == rhs.spin && lhs.axis == rhs.axis &&
         lhs.angle == rhs.angle;
}

bool operator==(const Delay& lhs, const Delay& rhs) {
  if (lhs.kind != rhs.kind) return false;
  return lhs.kind != DelayKind::Explicit || lhs.seconds == rhs.seconds;
}

namespace {

std::string kind_word(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Lexical:
      return "lexical";
    case ParseError::Kind::Syntax:
      return "syntax";
    default:
      return "semantic";
  }
}

std::string format_parse_error(ParseError::Kind kind, std::size_t offset,
                               std::size_t line, std::size_t column,
                               const std::string& message) {
  std::ostringstream out;
  out << kind_word(kind) << " error at line " << line << ", column " << column
      << " (offset " << offset << "): " << message;
  return out.str();
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t offset, std::size_t line,
                       std::size_t column, const std::string& message)
    : std::runtime_error(
          format_parse_error(kind, offset, line, column, message)),
      kind_(kind),
      offset_(offset),
      line_(line),
      column_(column) {}

namespace {

// Recursive-descent parser over a raw byte cursor. Separators ('-', ';',
// newline) only occur between events, so inside an event every character is
// consumed explicitly and '-' can serve as a sign.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PulseProgram parse_program() {
    PulseProgram program;
    skip_leading();
    while (!at_end()) {
      program.events.push_back(parse_event());
      if (!skip_separators()) break;
    }
    return program;
  }

  Angle parse_single_angle() {
    skip_blank();
    const Angle angle = parse_angle_expr();
    skip_blank();
    if (!at_end()) fail_syntax(pos_, "trailing characters after angle");
    return angle;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  // Spaces, tabs, carriage returns and '#' comments; never newlines or
  // separator characters.
  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  // Blank and comment-only lines before the first event.
  void skip_leading() {
    skip_blank();
    while (!at_end() && (peek() == '\n' || peek() == ';')) {
      ++pos_;
      skip_blank();
    }
  }

  // After an event: requires end of input or at least one separator; runs of
  // separators are tolerated. Returns false at end of input.
  bool skip_separators() {
    skip_blank();
    if (at_end()) return false;
    std::size_t count = 0;
    while (!at_end()) {
      const char c = peek();
      if (c == '-' || c == ';' || c == '\n') {
        ++pos_;
        ++count;
        skip_blank();
      } else {
        break;
      }
    }
    if (count == 0)
      fail_syntax(pos_, "expected '-', ';' or newline between events");
    return !at_end();
  }

  PulseEvent parse_event() {
    const char c = peek();
    if (c == 'R') return parse_pulse();
    const std::size_t start = pos_;
    std::string word;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0)) {
      word.push_back(text_[pos_]);
      ++pos_;
    }
    if (word == "Gz") return Crusher{};
    if (word == "tau1") return Delay{DelayKind::Tau1, 0.0};
    if (word == "tau2") return Delay{DelayKind::Tau2, 0.0};
    if (word == "delay") return parse_explicit_delay();
    fail_lexical(start, word.empty() ? "unexpected character"
                                     : "unknown token '" + word + "'");
  }

  PulseEvent parse_pulse() {
    ++pos_;  // 'R'
    Axis axis;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    switch (peek()) {
      case 'x':
        axis = negative ? Axis::NegX : Axis::X;
        break;
      case 'y':
        axis = negative ? Axis::NegY : Axis::Y;
        break;
      case 'z':
        axis = negative ? Axis::NegZ : Axis::Z;
        break;
      default:
        fail_lexical(pos_, "invalid rotation axis");
    }
    ++pos_;
    expect(':', "expected ':' after rotation axis");
    Spin spin;
    switch (peek()) {
      case 'a':
        spin = Spin::A;
        break;
      case 'b':
        spin = Spin::B;
        break;
      default:
        fail_semantic(pos_, "unknown spin label");
    }
    ++pos_;
    expect('(', "expected '(' before pulse angle");
    const Angle angle = parse_angle_expr();
    expect(')', "expected ')' after pulse angle");
    return RfPulse{spin, axis, angle};
  }

  PulseEvent parse_explicit_delay() {
    expect('(', "expected '(' after 'delay'");
    const std::size_t value_pos = pos_;
    // Accept a sign here so the negative-duration diagnostic is semantic,
    // not a syntax error on the '-'.
    const bool negative = peek() == '-';
    if (negative) ++pos_;
    const double seconds = parse_decimal();
    if (negative) fail_semantic(value_pos, "delay must be non-negative");
    expect(')', "expected ')' after delay duration");
    return Delay{DelayKind::Explicit, seconds};
  }

  Angle parse_angle_expr() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (peek() == 'p') {
      expect_word("pi");
      std::int64_t den = 1;
      if (peek() == '/') {
        ++pos_;
        den = parse_integer();
      }
      return make_rational(negative ? -1 : 1, den);
    }
    const std::size_t start = pos_;
    const NumberSpan span = scan_number(start);
    if (span.length == 0) fail_syntax(start, "expected angle");
    if (!span.is_integer) {
      pos_ = start + span.length;
      double value = parse_decimal_span(start, span.length);
      return Angle::radians(negative ? -value : value);
    }
    // Pure digits: rational numerator if "pi" (optionally with "/den")
    // follows, a plain decimal otherwise.
    pos_ = start + span.length;
    std::int64_t num = parse_integer_span(start, span.length);
    if (peek() == '/') {
      const std::size_t slash = pos_;
      ++pos_;
      const std::int64_t den = parse_integer();
      if (peek() != 'p') fail_syntax(pos_, "expected 'pi' after rational");
      expect_word("pi");
      if (den == 0) fail_semantic(slash + 1, "zero denominator");
      return make_rational(negative ? -num : num, den);
    }
    if (peek() == 'p') {
      expect_word("pi");
      return make_rational(negative ? -num : num, 1);
    }
    double value = parse_decimal_span(start, span.length);
    return Angle::radians(negative ? -value : value);
  }

  Angle make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) fail_semantic(pos_, "zero denominator");
    return Angle::pi_multiple(num, den);
  }

  struct NumberSpan {
    std::size_t length = 0;
    bool is_integer = true;
  };

  // digits [ '.' digits ] [ ('e'|'E') ['+'|'-'] digits ]
  NumberSpan scan_number(std::size_t start) const {
    NumberSpan span;
    std::size_t p = start;
    while (p < text_.size() && is_digit(text_[p])) ++p;
    if (p == start) return span;
    if (p < text_.size() && text_[p] == '.') {
      span.is_integer = false;
      ++p;
      while (p < text_.size() && is_digit(text_[p])) ++p;
    }
    if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
      if (q < text_.size() && is_digit(text_[q])) {
        span.is_integer = false;
        while (q < text_.size() && is_digit(text_[q])) ++q;
        p = q;
      }
    }
    span.length = p - start;
    return span;
  }

  static bool is_digit(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }

  double parse_decimal() {
    const std::size_t start = pos_;
    const NumberSpan span = scan_number(start);
    if (span.length == 0) fail_syntax(start, "expected decimal number");
    pos_ = start + span.length;
    return parse_decimal_span(start, span.length);
  }

  double parse_decimal_span(std::size_t start, std::size_t length) {
    double value = 0.0;
    const char* first = text_.data() + start;
    const auto result = std::from_chars(first, first + length, value);
    if (result.ec == std::errc::result_out_of_range || !std::isfinite(value))
      fail_lexical(start, "number out of range");
    if (result.ec != std::errc() || result.ptr != first + length)
      fail_syntax(start, "malformed number");
    return value;
  }

  std::int64_t parse_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ == start) fail_syntax(start, "expected integer");
    return parse_integer_span(start, pos_ - start);
  }

  std::int64_t parse_integer_span(std::size_t start, std::size_t length) {
    std::int64_t value = 0;
    const char* first = text_.data() + start;
    const auto result = std::from_chars(first, first + length, value);
    if (result.ec == std::errc::result_out_of_range)
      fail_lexical(start, "integer literal out of range");
    if (result.ec != std::errc() || result.ptr != first + length)
      fail_syntax(start, "malformed integer");
    return value;
  }

  void expect(char c, const std::string& message) {
    if (peek() != c) fail_syntax(pos_, message);
    ++pos_;
  }

  void expect_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word)
      fail_syntax(pos_, "expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  [[noreturn]] void fail(ParseError::Kind kind, std::size_t offset,
                         const std::string& message) const {
    std::size_t line = 1;
    std::size_t line_start = 0;
    const std::size_t clamped = std::min(offset, text_.size());
    for (std::size_t i = 0; i < clamped; ++i) {
      if (text_[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    throw ParseError(kind, offset, line, clamped - line_start + 1, message);
  }

  [[noreturn]] void fail_lexical(std::size_t offset,
                                 const std::string& message) const {
    fail(ParseError::Kind::Lexical, offset, message);
  }
  [[noreturn]] void fail_syntax(std::size_t offset,
                                const std::string& message) const {
    fail(ParseError::Kind::Syntax, offset, message);
  }
  [[noreturn]] void fail_semantic(std::size_t offset,
                                  const std::string& message) const {
    fail(ParseError::Kind::Semantic, offset, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PulseProgram parse(std::string_view text) {
  return Parser(text).parse_program();
}

Angle parse_angle(std::string_view text) {
  return Parser(text).parse_single_angle();
}

namespace {

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string format_angle(const Angle& angle) {
  if (!angle.is_pi_rational()) return format_double(angle.radians());
  const std::int64_t num = angle.num();
  const std::int64_t den = angle.den();
  std::string out;
  if (num == 0) return "0pi";
  if (num == 1)
    out = "pi";
  else if (num == -1)
    out = "-pi";
  else
    out = std::to_string(num) + (den == 1 ? "pi" : "");
  if (den != 1) {
    if (num == 1 || num == -1)
      out += "/" + std::to_string(den);
    else
      out += "/" + std::to_string(den) + "pi";
  }
  return out;
}

char axis_letter(Axis axis) {
  switch (axis_generator(axis)) {
    case Axis::X:
      return 'x';
    case Axis::Y:
      return 'y';
    default:
      return 'z';
  }
}

}  // namespace

std::string print(const PulseEvent& event) {
  return std::visit(
      [](const auto& e) -> std::string {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, RfPulse>) {
          std::string out = "R";
          if (axis_sign(e.axis) < 0) out += '-';
          out += axis_letter(e.axis);
          out += ':';
          out += e.spin == Spin::A ? 'a' : 'b';
          out += '(';
          out += format_angle(e.angle);
          out += ')';
          return out;
        } else if constexpr (std::is_same_v<T, Delay>) {
          switch (e.kind) {
            case DelayKind::Tau1:
              return "tau1";
            case DelayKind::Tau2:
              return "tau2";
            default:
              return "delay(" + format_double(e.seconds) + ")";
          }
        } else {
          return "Gz";
        }
      },
      event);
}

std::string print(const PulseProgram& program) {
  std::string out;
  for (std::size_t i = 0; i < program.events.size(); ++i) {
    if (i > 0) out += " - ";
    out += print(program.events[i]);
  }
  return out;
}

PulseProgram builtin_program(std::string_view name) {
  const auto pi = [](std::int64_t num, std::int64_t den) {
    return Angle::pi_multiple(num, den);
  };
  PulseProgram program;
  program.name = std::string(name);
  if (name == "prep_pp") {
    program.events = {
        RfPulse{Spin::B, Axis::X, pi(1, 3)},
        Crusher{},
        RfPulse{Spin::B, Axis::X, pi(1, 4)},
        Delay{DelayKind::Tau1, 0.0},
        RfPulse{Spin::B, Axis::NegY, pi(1, 4)},
        Crusher{},
    };
  } else if (name == "north") {
    program.events = {
        RfPulse{Spin::B, Axis::NegY, pi(1, 2)},
        Delay{DelayKind::Tau1, 0.0},
        RfPulse{Spin::B, Axis::NegX, pi(1, 2)},
        RfPulse{Spin::A, Axis::Y, pi(1, 2)},
        Delay{DelayKind::Tau2, 0.0},
        RfPulse{Spin::A, Axis::NegY, pi(1, 2)},
        RfPulse{Spin::A, Axis::X, pi(1, 4)},
        RfPulse{Spin::B, Axis::X, pi(1, 2)},
        Delay{DelayKind::Tau1, 0.0},
        RfPulse{Spin::B, Axis::NegY, pi(1, 2)},
    };
  } else if (name == "south") {
    program.events = {
        RfPulse{Spin::B, Axis::Y, pi(1, 2)},
        Delay{DelayKind::Tau1, 0.0},
        RfPulse{Spin::B, Axis::NegX, pi(1, 2)},
        RfPulse{Spin::A, Axis::NegY, pi(1, 2)},
        Delay{DelayKind::Tau2, 0.0},
        RfPulse{Spin::A, Axis::Y, pi(1, 2)},
        RfPulse{Spin::A, Axis::NegX, pi(1, 4)},
        RfPulse{Spin::B, Axis::X, pi(1, 2)},
        Delay{DelayKind::Tau1, 0.0},
        RfPulse{Spin::B, Axis::NegY, pi(1, 2)},
    };
  } else if (name == "frame_north") {
    program.events = {
        RfPulse{Spin::A, Axis::Z, pi(1, 1)},
        RfPulse{Spin::B, Axis::Z, pi(1, 1)},
    };
  } else if (name == "frame_south") {
    program.events = {
        RfPulse{Spin::A, Axis::Z, pi(1, 1)},
    };
  } else {
    throw std::invalid_argument("unknown builtin program: " +
                                std::string(name));
  }
  return program;
}

namespace {

// Angle with the axis sign folded in, so R_{-u}(t) == R_u(-t).
Angle signed_angle(const RfPulse& pulse) {
  return axis_sign(pulse.axis) < 0 ? -pulse.angle : pulse.angle;
}

}  // namespace

PulseProgram simplify(const PulseProgram& program) {
  PulseProgram out;
  out.name = program.name;
  for (const PulseEvent& event : program.events) {
    if (const auto* delay = std::get_if<Delay>(&event)) {
      if (delay->kind == DelayKind::Explicit && delay->seconds == 0.0)
        continue;
      out.events.push_back(event);
      continue;
    }
    const auto* pulse = std::get_if<RfPulse>(&event);
    if (pulse == nullptr) {  // crusher
      out.events.push_back(event);
      continue;
    }
    Angle merged = signed_angle(*pulse);
    if (!out.events.empty()) {
      if (const auto* prev = std::get_if<RfPulse>(&out.events.back());
          prev != nullptr && prev->spin == pulse->spin &&
          axis_generator(prev->axis) == axis_generator(pulse->axis)) {
        merged = signed_angle(*prev) + merged;
        out.events.pop_back();
        if (merged.is_zero()) continue;
        out.events.push_back(
            RfPulse{pulse->spin, axis_generator(pulse->axis), merged});
        continue;
      }
    }
    if (merged.is_zero()) continue;
    out.events.push_back(event);
  }
  return out;
}

}  // namespace qsdc
