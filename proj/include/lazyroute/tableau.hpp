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

#include "lazyroute/f2.hpp"
#include "lazyroute/gate.hpp"
#include "lazyroute/pauli_string.hpp"

namespace lazyroute {

/**
 * A Clifford operator T, represented by the conjugation images of the
 * single-letter generators under both T and its inverse:
 *
 *   image_x(q)         = T X_q T^dag        image_z(q) = T Z_q T^dag
 *   inverse_image_x(q) = T^dag X_q T        ...
 *
 * Keeping both directions makes left- and right-multiplication by a gate,
 * inversion, and conjugation in either direction all cheap: multiplying by
 * a gate updates one side by local bit rules and the other side by mapping
 * the gate's own (constant-size) generator images through the stored rows.
 */
class CliffordTableau {
 public:
  CliffordTableau() = default;

  /** Identity operator on n qubits. */
  explicit CliffordTableau(std::uint32_t n);

  static CliffordTableau identity(std::uint32_t n) { return CliffordTableau(n); }

  /** Tableau of a Clifford gate word (gates applied left to right). */
  static CliffordTableau from_circuit(const Circuit& c);

  /** Tableau of the basis permutation |x> -> |Ax>. */
  static CliffordTableau from_linear(const LinearTable& a);

  /** Tableau of the wire permutation sending wire i content to sigma(i). */
  static CliffordTableau from_permutation(const Permutation& sigma);

  std::uint32_t size() const { return n_; }

  const PauliString& image_x(Qubit q) const { return fwd_x_[q]; }
  const PauliString& image_z(Qubit q) const { return fwd_z_[q]; }
  const PauliString& inverse_image_x(Qubit q) const { return inv_x_[q]; }
  const PauliString& inverse_image_z(Qubit q) const { return inv_z_[q]; }

  /** T <- gate * T. The gate must be Clifford. */
  void left_mul(const Gate& g) { mul(g, /*right=*/false, /*adjoint=*/false); }

  /** T <- gate^dag * T. */
  void left_mul_inverse(const Gate& g) { mul(g, /*right=*/false, /*adjoint=*/true); }

  /** T <- T * gate. */
  void right_mul(const Gate& g) { mul(g, /*right=*/true, /*adjoint=*/false); }

  /** T <- T * gate^dag. */
  void right_mul_inverse(const Gate& g) { mul(g, /*right=*/true, /*adjoint=*/true); }

  /** The inverse operator (swaps the two image families). */
  CliffordTableau inverted() const;

  /** Operator product a * b. */
  static CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b);

  enum class Direction {
    Forward,  ///< T p T^dag
    Inverse,  ///< T^dag p T
  };

  PauliString conjugate(const PauliString& p, Direction dir) const;

  bool is_identity() const;

  bool operator==(const CliffordTableau& other) const = default;

 private:
  void mul(const Gate& g, bool right, bool adjoint);

  std::uint32_t n_ = 0;
  std::vector<PauliString> fwd_x_;
  std::vector<PauliString> fwd_z_;
  std::vector<PauliString> inv_x_;
  std::vector<PauliString> inv_z_;
};

/**
 * Rewrites a signed Pauli string p as g~ p g~^dag in place, where g~ is the
 * unitary of `g` (or its adjoint). The gate must be Clifford; only letters
 * on the gate's wires change.
 */
void conjugate_by_gate(PauliString& p, const Gate& g, bool adjoint = false);

/**
 * One-qubit gates L with L P L^dag acting as Z on every wire in P's support
 * (X letters get H, Y letters get a square root of X; the sign is carried
 * unchanged). Gates are returned in ascending wire order.
 */
std::vector<Gate> diagonalize_local(const PauliString& p);

}  // namespace lazyroute
