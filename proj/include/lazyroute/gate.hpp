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

#include <optional>
#include <string>
#include <vector>

#include "lazyroute/angle.hpp"
#include "lazyroute/common.hpp"
#include "lazyroute/pauli_string.hpp"

namespace lazyroute {

enum class GateKind {
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  SqrtX,
  SqrtXdg,
  Rz,
  CNOT,
  Swap,
  PauliRot,
};

/** Name as used in diagnostics and QASM ("h", "cx", ...). */
std::string gate_kind_name(GateKind kind);

/**
 * A gate application. Operands are wire indices; for CNOT the first operand
 * is the control and the second the target. PauliRot stores its axis as a
 * sign-positive Pauli string (an input axis sign is folded into the angle)
 * and its operand list is the axis support.
 */
struct Gate {
  GateKind kind;
  std::vector<Qubit> qubits;
  Angle angle;                       // Rz and PauliRot only
  std::optional<PauliString> axis;   // PauliRot only

  static Gate h(Qubit q) { return one_qubit(GateKind::H, q); }
  static Gate x(Qubit q) { return one_qubit(GateKind::X, q); }
  static Gate y(Qubit q) { return one_qubit(GateKind::Y, q); }
  static Gate z(Qubit q) { return one_qubit(GateKind::Z, q); }
  static Gate s(Qubit q) { return one_qubit(GateKind::S, q); }
  static Gate sdg(Qubit q) { return one_qubit(GateKind::Sdg, q); }
  static Gate t(Qubit q) { return one_qubit(GateKind::T, q); }
  static Gate tdg(Qubit q) { return one_qubit(GateKind::Tdg, q); }
  static Gate sqrt_x(Qubit q) { return one_qubit(GateKind::SqrtX, q); }
  static Gate sqrt_x_dg(Qubit q) { return one_qubit(GateKind::SqrtXdg, q); }

  static Gate rz(Qubit q, Angle angle) {
    Gate g = one_qubit(GateKind::Rz, q);
    g.angle = angle;
    return g;
  }

  static Gate cnot(Qubit control, Qubit target) {
    detail::require(control != target, "cnot operands must differ");
    return Gate{GateKind::CNOT, {control, target}, Angle(), std::nullopt};
  }

  static Gate swap(Qubit a, Qubit b) {
    detail::require(a != b, "swap operands must differ");
    return Gate{GateKind::Swap, {a, b}, Angle(), std::nullopt};
  }

  static Gate pauli_rot(PauliString axis, Angle angle) {
    detail::require(!axis.is_identity(), "PauliRot axis must be non-identity");
    if (axis.negative()) {
      axis.set_negative(false);
      angle = -angle;
    }
    Gate g;
    g.kind = GateKind::PauliRot;
    g.qubits = axis.support();
    g.angle = angle;
    g.axis = std::move(axis);
    return g;
  }

  std::size_t num_qubits() const { return qubits.size(); }

  bool is_clifford() const {
    switch (kind) {
      case GateKind::T:
      case GateKind::Tdg:
        return false;
      case GateKind::Rz:
      case GateKind::PauliRot:
        return angle.is_clifford();
      default:
        return true;
    }
  }

  /** Diagonal in the computational basis. */
  bool is_diagonal() const {
    switch (kind) {
      case GateKind::Z:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::Rz:
        return true;
      case GateKind::PauliRot:
        return axis->is_diagonal();
      default:
        return false;
    }
  }

  /** Same gate applied to remapped wires; `map` must be injective on the
   *  operands. PauliRot axes are relocated letterwise. */
  template <typename Map>
  Gate relabeled(Map&& map) const;

  bool operator==(const Gate& other) const {
    return kind == other.kind && qubits == other.qubits && angle == other.angle &&
           axis == other.axis;
  }

  std::string str() const;

 private:
  static Gate one_qubit(GateKind kind, Qubit q) {
    return Gate{kind, {q}, Angle(), std::nullopt};
  }
};

/** A gate word. Gates are applied left to right: the circuit [g1, g2]
 *  implements the operator U(g2) * U(g1). */
struct Circuit {
  Qubit n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(Qubit n) : n_qubits(n) {}

  void append(Gate gate) {
    for (Qubit q : gate.qubits)
      detail::require(q < n_qubits, "gate operand " + std::to_string(q) +
                                        " out of range for " + std::to_string(n_qubits) +
                                        " qubits");
    if (gate.kind == GateKind::PauliRot)
      detail::require(gate.axis->size() == n_qubits,
                      "PauliRot axis width differs from circuit width");
    gates.push_back(std::move(gate));
  }

  void extend(const Circuit& other) {
    for (const Gate& g : other.gates) append(g);
  }

  std::size_t size() const { return gates.size(); }

  /** Same gates on a wider register. */
  Circuit padded(Qubit n) const {
    detail::require(n >= n_qubits, "cannot pad circuit to a narrower register");
    Circuit out(n);
    for (const Gate& g : gates) {
      Gate h = g;
      if (h.kind == GateKind::PauliRot) {
        PauliString wide(n);
        for (Qubit q = 0; q < h.axis->size(); ++q) wide.set_letter(q, h.axis->letter(q));
        wide.set_negative(h.axis->negative());
        h.axis = std::move(wide);
      }
      out.append(std::move(h));
    }
    return out;
  }

  bool operator==(const Circuit& other) const = default;
};

enum class CountMode {
  /** Two-qubit gates, each counted once. */
  Raw2q,
  /** CNOT gates where a SWAP counts as three CNOTs. */
  CnotEquivalent,
};

/** Counts entangling cost. Only CNOT and SWAP gates contribute; in Raw2q
 *  mode any gate touching two or more wires counts once. */
std::size_t count_cnots(const Circuit& c, CountMode mode = CountMode::CnotEquivalent);

template <typename Map>
Gate Gate::relabeled(Map&& map) const {
  Gate out = *this;
  for (auto& q : out.qubits) q = map(q);
  if (kind == GateKind::PauliRot) {
    PauliString moved(axis->size());
    moved.set_negative(axis->negative());
    for (Qubit q : axis->support()) moved.set_letter(map(q), axis->letter(q));
    out.qubits = moved.support();
    out.axis = std::move(moved);
  }
  return out;
}

}  // namespace lazyroute
