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

#include "lazyroute/prepass.hpp"

#include <cstddef>
#include <utility>

namespace lazyroute {

namespace {

PauliString rotation_axis(const Gate& rot, std::uint32_t n) {
  if (rot.kind == GateKind::Rz) return PauliString::single(n, rot.qubits[0], PauliLetter::Z);
  detail::require(rot.kind == GateKind::PauliRot, "expected a rotation gate, got " + rot.str());
  return *rot.axis;
}

}  // namespace

Gate as_rotation_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::T:
      return Gate::rz(g.qubits[0], Angle::exact(1));
    case GateKind::Tdg:
      return Gate::rz(g.qubits[0], Angle::exact(-1));
    case GateKind::S:
      return Gate::rz(g.qubits[0], Angle::exact(2));
    case GateKind::Sdg:
      return Gate::rz(g.qubits[0], Angle::exact(-2));
    default:
      return g;
  }
}

RotationSequence normalize(const Circuit& c) {
  const std::uint32_t n = c.n_qubits;
  RotationSequence seq{{}, CliffordTableau::identity(n)};
  for (const Gate& raw : c.gates) {
    const Gate g = as_rotation_gate(raw);
    if (g.is_clifford()) {
      seq.trailing.left_mul(g);
      continue;
    }
    const PauliString moved =
        seq.trailing.conjugate(rotation_axis(g, n), CliffordTableau::Direction::Inverse);
    seq.rotations.push_back(Gate::pauli_rot(moved, g.angle));
  }
  return seq;
}

RotationSequence merge_rotations(RotationSequence seq) {
  const std::uint32_t n = seq.trailing.size();
  // Clifford operators produced by merges accumulate here. Rotations
  // processed later are pulled through it so the sequence keeps satisfying
  // U(circuit) = [trailing * folded] * R_m ... R_1.
  CliffordTableau folded = CliffordTableau::identity(n);
  std::vector<Gate> kept;
  kept.reserve(seq.rotations.size());
  for (const Gate& r : seq.rotations) {
    detail::require(r.kind == GateKind::PauliRot, "merging takes a normalized sequence");
    PauliString axis = folded.conjugate(*r.axis, CliffordTableau::Direction::Inverse);
    Angle theta = r.angle;
    if (axis.negative()) {
      axis.set_negative(false);
      theta = -theta;
    }
    bool absorbed = false;
    for (std::size_t j = kept.size(); j-- > 0;) {
      const PauliString& other = *kept[j].axis;
      if (other.same_letters(axis)) {
        const Angle combined = kept[j].angle + theta;
        if (combined.is_zero()) {
          kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(j));
        } else {
          const Gate merged = Gate::pauli_rot(axis, combined);
          if (merged.is_clifford()) {
            // Commutes with every rotation walked past, so it may leave the
            // word on the trailing side.
            folded.right_mul(merged);
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(j));
          } else {
            kept[j] = merged;
          }
        }
        absorbed = true;
        break;
      }
      if (!other.commutes_with(axis)) break;
    }
    if (!absorbed) kept.push_back(Gate::pauli_rot(axis, theta));
  }
  seq.rotations = std::move(kept);
  seq.trailing = CliffordTableau::compose(seq.trailing, folded);
  return seq;
}

std::vector<std::vector<Gate>> group_rotations(const RotationSequence& seq) {
  std::vector<std::vector<Gate>> groups;
  for (const Gate& r : seq.rotations) {
    detail::require(r.kind == GateKind::PauliRot, "grouping takes a normalized sequence");
    bool fits = !groups.empty();
    if (fits) {
      for (const Gate& member : groups.back()) {
        if (!member.axis->commutes_with(*r.axis)) {
          fits = false;
          break;
        }
      }
    }
    if (fits)
      groups.back().push_back(r);
    else
      groups.push_back({r});
  }
  return groups;
}

}  // namespace lazyroute
