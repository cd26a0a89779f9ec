// Copyright 2026 The lazyroute developers
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

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace lazyroute {

/**
 * A rotation angle, either an exact integer multiple of pi/4 or an
 * arbitrary value in radians.
 *
 * Exact angles keep their full multiplier: summing histories never reduces
 * the stored integer. Reduction modulo a period happens only inside
 * predicates such as is_clifford(). Adding a Real angle to anything yields
 * a Real angle.
 */
class Angle {
 public:
  /** Tolerance used when classifying Real angles against pi/2 multiples. */
  static constexpr double kCliffordTolerance = 1e-12;

  Angle() : exact_(true), k_(0), value_(0.0) {}

  static Angle exact(std::int64_t k) {
    Angle a;
    a.exact_ = true;
    a.k_ = k;
    a.value_ = 0.0;
    return a;
  }

  static Angle real(double radians) {
    Angle a;
    a.exact_ = false;
    a.k_ = 0;
    a.value_ = radians;
    return a;
  }

  bool is_exact() const { return exact_; }

  /** Multiplier k such that the angle equals k*pi/4. Exact angles only. */
  std::int64_t exact_k() const { return k_; }

  double radians() const {
    return exact_ ? static_cast<double>(k_) * std::numbers::pi / 4.0 : value_;
  }

  /** True when the rotation is a Clifford operation, i.e. the angle is a
   *  multiple of pi/2 (within kCliffordTolerance for Real angles). */
  bool is_clifford() const {
    if (exact_) return (k_ % 2) == 0;
    double m = std::fmod(value_, std::numbers::pi / 2.0);
    if (m < 0) m += std::numbers::pi / 2.0;
    return m < kCliffordTolerance || (std::numbers::pi / 2.0 - m) < kCliffordTolerance;
  }

  bool is_zero() const { return exact_ ? k_ == 0 : value_ == 0.0; }

  /** Number of quarter turns (pi/2 units) modulo 4 for a Clifford angle. */
  int clifford_quarter_turns() const {
    if (exact_) {
      std::int64_t q = ((k_ / 2) % 4 + 4) % 4;
      return static_cast<int>(q);
    }
    double q = std::round(value_ / (std::numbers::pi / 2.0));
    std::int64_t qi = static_cast<std::int64_t>(q);
    return static_cast<int>((qi % 4 + 4) % 4);
  }

  Angle operator+(const Angle& other) const {
    if (exact_ && other.exact_) return exact(k_ + other.k_);
    return real(radians() + other.radians());
  }

  Angle operator-() const { return exact_ ? exact(-k_) : real(-value_); }

  /** Structural equality: exact angles compare by multiplier, real angles
   *  by bit-identical value; an exact and a real angle are never equal. */
  bool operator==(const Angle& other) const {
    if (exact_ != other.exact_) return false;
    return exact_ ? k_ == other.k_ : value_ == other.value_;
  }

  std::string str() const {
    if (exact_) return "exact(" + std::to_string(k_) + ")*pi/4";
    return std::to_string(value_) + "rad";
  }

 private:
  bool exact_;
  std::int64_t k_;
  double value_;
};

}  // namespace lazyroute
