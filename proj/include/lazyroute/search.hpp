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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "lazyroute/common.hpp"

namespace lazyroute {

/**
 * One scored way of handling the current decision point: the state reached
 * after taking it, plus the CNOT-equivalent cost of the subcircuit it emits.
 */
template <typename State>
struct SearchBranch {
  State state;
  std::uint64_t cost = 0;
};

/**
 * Cheapest leaf reachable from `state` within `depth` further decision
 * levels. `expand` maps a state to its scored branches in enumeration
 * order; an empty result marks a natural leaf. The value is the sum of
 * branch costs along the cheapest path, excluding any cost already paid
 * to reach `state`.
 */
template <typename State, typename ExpandFn>
std::uint64_t search_min_leaf(const State& state, const ExpandFn& expand, std::uint32_t depth) {
  if (depth == 0) return 0;
  std::vector<SearchBranch<State>> branches = expand(state);
  if (branches.empty()) return 0;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const SearchBranch<State>& b : branches) {
    std::uint64_t total = b.cost + search_min_leaf(b.state, expand, depth - 1);
    if (total < best) best = total;
  }
  return best;
}

/** Winner of a recursive search: root-level branch index and the score of
 *  the cheapest leaf below it. */
struct SearchResult {
  std::size_t index = 0;
  std::uint64_t score = 0;
};

/**
 * Picks among the given root-level branches by exhaustive lookahead: every
 * branch is expanded `depth` further levels via `expand`, each leaf is
 * scored by the sum of costs along its path, and the branch under the
 * minimal leaf wins. Ties go to the first-enumerated branch. A single
 * branch is returned immediately without expansion.
 */
template <typename State, typename ExpandFn>
SearchResult recursive_search(const std::vector<SearchBranch<State>>& branches,
                              const ExpandFn& expand, std::uint32_t depth) {
  detail::require(!branches.empty(), "recursive search needs at least one candidate");
  if (branches.size() == 1) return {0, branches[0].cost};
  SearchResult best{0, std::numeric_limits<std::uint64_t>::max()};
  for (std::size_t i = 0; i < branches.size(); ++i) {
    std::uint64_t total = branches[i].cost + search_min_leaf(branches[i].state, expand, depth);
    if (total < best.score) best = {i, total};
  }
  return best;
}

}  // namespace lazyroute
