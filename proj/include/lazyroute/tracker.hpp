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

#include <string>
#include <variant>

#include "lazyroute/f2.hpp"
#include "lazyroute/tableau.hpp"

namespace lazyroute {

/**
 * The residual final operator h maintained by the routing loop, one
 * representation per method. The defining property ties it to the routed
 * circuit: ⟦h⟧ * U(output) = U(input), where ⟦.⟧ is the tracker's
 * interpretation as a unitary.
 *
 * All three representations are cheap-copy values, which the finite-depth
 * search relies on for branching.
 */
using Tracker = std::variant<Permutation, LinearTable, CliffordTableau>;

std::uint32_t tracker_size(const Tracker& h);

bool tracker_is_identity(const Tracker& h);

/** "permutation", "linear", or "tableau". */
std::string tracker_kind_name(const Tracker& h);

/** The tracker's operator as a Clifford tableau. Permutations and linear
 *  tables embed exactly; a tableau is returned as-is. */
CliffordTableau tracker_tableau(const Tracker& h);

}  // namespace lazyroute
