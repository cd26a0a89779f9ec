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

#include "lazyroute/coupling_graph.hpp"
#include "lazyroute/gate.hpp"

namespace lazyroute {

/**
 * CNOT word along tree edges that accumulates the parity of all terminals
 * onto the root: if M is the word's GF(2) wire matrix, row root of M is the
 * indicator vector of the terminal set. Other rows inside the tree are
 * scrambled; wires outside the tree are untouched.
 *
 * Leaves are peeled lowest index first. Peeling a leaf into a neighbour
 * that holds no partial parity yet costs two CNOTs; peeling into one that
 * does costs a single merge CNOT, so the word length is at most
 * 2(|V|-1) - 1 and exactly |V|-1 when the tree has no Steiner points along
 * the peel order.
 */
std::vector<Gate> fan_in(const SteinerTree& tree);

/**
 * CNOT word along tree edges that clears a marked column down to the root:
 * if M is the word's GF(2) wire matrix and y the indicator of the terminal
 * set (which must contain the root), then M y = e_root and row root of
 * M = e_root. Used to push a column of an inverse table into a single wire
 * without disturbing the root's row.
 *
 * First pass walks leaves upward, seeding every unmarked Steiner vertex
 * from its child so the second pass telescopes; second pass re-peels the
 * tree emitting parent-to-leaf CNOTs.
 */
std::vector<Gate> fan_out(const SteinerTree& tree);

}  // namespace lazyroute
