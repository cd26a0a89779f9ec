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

#include "lazyroute/gate.hpp"

namespace lazyroute {

std::string gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H:
      return "h";
    case GateKind::X:
      return "x";
    case GateKind::Y:
      return "y";
    case GateKind::Z:
      return "z";
    case GateKind::S:
      return "s";
    case GateKind::Sdg:
      return "sdg";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
    case GateKind::SqrtX:
      return "sx";
    case GateKind::SqrtXdg:
      return "sxdg";
    case GateKind::Rz:
      return "rz";
    case GateKind::CNOT:
      return "cx";
    case GateKind::Swap:
      return "swap";
    case GateKind::PauliRot:
      return "pauli_rot";
  }
  return "?";
}

std::string Gate::str() const {
  std::string out = gate_kind_name(kind);
  if (kind == GateKind::Rz) out += "(" + angle.str() + ")";
  if (kind == GateKind::PauliRot) out += "(" + axis->str() + ", " + angle.str() + ")";
  out += " ";
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(qubits[i]);
  }
  return out;
}

std::size_t count_cnots(const Circuit& c, CountMode mode) {
  std::size_t total = 0;
  for (const Gate& g : c.gates) {
    if (mode == CountMode::Raw2q) {
      if (g.num_qubits() >= 2) ++total;
    } else {
      if (g.kind == GateKind::CNOT) ++total;
      if (g.kind == GateKind::Swap) total += 3;
    }
  }
  return total;
}

}  // namespace lazyroute
