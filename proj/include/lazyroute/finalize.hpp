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
#include <vector>

#include "lazyroute/bitvec.hpp"
#include "lazyroute/gate.hpp"
#include "lazyroute/pauli_string.hpp"
#include "lazyroute/tracker.hpp"

namespace lazyroute {

/** One term of a real-weighted Pauli observable. The stored string is
 *  always sign-positive; signs live in the coefficient. */
struct ObservableTerm {
  double coefficient = 0.0;
  PauliString pauli;
};

/** A real linear combination of Pauli strings on a fixed register. */
class Observable {
 public:
  explicit Observable(std::uint32_t n) : n_(n) {}

  std::uint32_t size() const { return n_; }
  const std::vector<ObservableTerm>& terms() const { return terms_; }

  /** Adds coefficient * pauli, folding the string's sign into the
   *  coefficient and merging with an existing same-letters term. Terms
   *  whose coefficient cancels to exactly zero are dropped. */
  void add(double coefficient, PauliString pauli);

 private:
  std::uint32_t n_;
  std::vector<ObservableTerm> terms_;
};

/** Rewrites each term P as h^-1 P h, so expectation values taken on the
 *  routed circuit's output state equal those of the original circuit. */
Observable conjugate_observable(const Observable& obs, const Tracker& h);

/**
 * The measurement-side correction for a final operator h.
 *
 * Run `diagonalizer` after the routed circuit, measure every wire to get a
 * bit vector w, then map it through w -> L w + b over GF(2). The corrected
 * samples are distributed exactly as computational-basis samples of the
 * original circuit. The diagonalizer uses unconstrained wire pairs; route
 * it separately if it must respect a coupling graph.
 */
struct AffineFix {
  Circuit diagonalizer;
  std::vector<BitVec> rows;  // L, one row per output bit
  BitVec offset;             // b

  std::uint32_t size() const { return static_cast<std::uint32_t>(rows.size()); }
};

/** Builds the measurement fix for h: conjugates each Z_i through h,
 *  co-diagonalizes the resulting commuting strings with a Clifford circuit,
 *  and reads the affine map off their diagonal forms. */
AffineFix sampling_fix(const Tracker& h);

/** Applies the affine map: bit i of the result is b_i xor <L_i, w>. */
BitVec apply_fix(const AffineFix& fix, const BitVec& w);

}  // namespace lazyroute
