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

#include <vector>

#include "lazyroute/gate.hpp"
#include "lazyroute/tableau.hpp"

namespace lazyroute {

/**
 * A circuit in rotation normal form: U(circuit) = ⟦trailing⟧ * W, where W
 * is the word of `rotations` applied in list order. Every rotation is a
 * PauliRot gate with a non-Clifford angle and a sign-positive axis.
 */
struct RotationSequence {
  std::vector<Gate> rotations;
  CliffordTableau trailing;
};

/** T/Tdg/S/Sdg as exact Rz gates; every other gate passes through. Applied
 *  at ingestion so phase gates take a single code path. */
Gate as_rotation_gate(const Gate& g);

/**
 * Pulls all Clifford gates past the rotations: scans the circuit keeping a
 * tableau U of the Cliffords seen so far; each non-Clifford rotation on
 * axis P is re-expressed on U†PU and appended to the list; U becomes the
 * trailing operator. Rejects gates outside the clifford method's input set.
 */
RotationSequence normalize(const Circuit& c);

/**
 * Rotation merging: each rotation walks backward through the output list
 * and merges into the first rotation with the same axis, adding angles;
 * the walk stops early at the first non-commuting axis, in which case the
 * rotation is appended at the end. A merged angle that becomes Clifford
 * removes the rotation from the list and folds it into `trailing`; a
 * merged angle of exactly zero deletes it outright.
 */
RotationSequence merge_rotations(RotationSequence seq);

/**
 * Greedy left-to-right grouping: the current group is extended while the
 * next rotation commutes with every rotation already in it. Concatenating
 * the groups reproduces the sequence order.
 */
std::vector<std::vector<Gate>> group_rotations(const RotationSequence& seq);

}  // namespace lazyroute
