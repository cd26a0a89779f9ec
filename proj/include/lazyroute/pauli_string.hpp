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

#include <cstdint>
#include <string>
#include <vector>

#include "lazyroute/bitvec.hpp"
#include "lazyroute/common.hpp"

namespace lazyroute {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

/**
 * A signed Pauli string over n qubits.
 *
 * Letters are stored in the symplectic (x, z) encoding with the Hermitian
 * convention Y = i*X*Z, so every string with sign +/-1 is Hermitian.
 * Phases +/-i never appear at rest; they can only arise transiently inside
 * products, and multiply() rejects results that are not Hermitian.
 */
class PauliString {
 public:
  PauliString() = default;

  /** Identity string on n qubits, sign +1. */
  explicit PauliString(std::size_t n) : x_(n), z_(n), negative_(false) {}

  /** Single-letter string: `letter` at `qubit`, identity elsewhere. */
  static PauliString single(std::size_t n, Qubit qubit, PauliLetter letter) {
    PauliString p(n);
    p.set_letter(qubit, letter);
    return p;
  }

  /** Parses the text form, e.g. "+IXYZ" or "-ZZ". Qubit 0 is leftmost. */
  static PauliString parse(const std::string& text);

  std::size_t size() const { return x_.size(); }

  PauliLetter letter(Qubit q) const {
    return static_cast<PauliLetter>((x_.get(q) ? 1 : 0) | (z_.get(q) ? 2 : 0));
  }

  void set_letter(Qubit q, PauliLetter l) {
    auto v = static_cast<std::uint8_t>(l);
    x_.set(q, v & 1);
    z_.set(q, v & 2);
  }

  bool negative() const { return negative_; }
  void set_negative(bool neg) { negative_ = neg; }
  void flip_sign() { negative_ = !negative_; }

  const BitVec& x_bits() const { return x_; }
  const BitVec& z_bits() const { return z_; }
  BitVec& x_bits() { return x_; }
  BitVec& z_bits() { return z_; }

  bool is_identity() const { return !x_.any() && !z_.any(); }

  /** True when every letter is I or Z (a diagonal operator). */
  bool is_diagonal() const { return !x_.any(); }

  /** Qubits on which the string acts non-trivially, ascending. */
  std::vector<Qubit> support() const;

  std::size_t weight() const;

  bool commutes_with(const PauliString& other) const {
    return !(x_.dot(other.z_bits()) ^ z_.dot(other.x_bits()));
  }

  /** Letters equal, signs ignored. */
  bool same_letters(const PauliString& other) const {
    return x_ == other.x_bits() && z_ == other.z_bits();
  }

  bool operator==(const PauliString& other) const = default;

  /**
   * Multiplies `this * other` in place, tracking the i-power that the
   * letterwise products accumulate. `phase_exponent` is incremented modulo 4;
   * callers composing several factors pass the same accumulator through and
   * fold it into the sign once at the end (see finish_phase()).
   */
  void multiply(const PauliString& other, int& phase_exponent);

  /** Folds an accumulated i-power into the sign. Requires the power to be
   *  0 or 2 mod 4, i.e. a Hermitian result. */
  void finish_phase(int phase_exponent);

  std::string str() const;

 private:
  BitVec x_;
  BitVec z_;
  bool negative_ = false;
};

}  // namespace lazyroute
