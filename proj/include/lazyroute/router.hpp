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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lazyroute/coupling_graph.hpp"
#include "lazyroute/f2.hpp"
#include "lazyroute/gate.hpp"
#include "lazyroute/tableau.hpp"
#include "lazyroute/tracker.hpp"

namespace lazyroute {

/**
 * The three routing instantiations. Each one defers a different gate
 * subgroup into its tracker: wire permutations (SWAP chains), invertible
 * GF(2) maps (CNOT/SWAP), or the full Clifford group.
 */
enum class Method {
  Swap,
  Linear,
  Clifford,
};

std::string method_name(Method m);

/** Parses "swap", "linear", or "clifford". */
Method parse_method(const std::string& name);

/** Search depth used when RouteOptions leaves it unset. */
std::uint32_t default_depth(Method m);

struct RouteOptions {
  Method method = Method::Swap;

  /** Lookahead levels beyond the immediate candidates. */
  std::optional<std::uint32_t> depth;

  /** Clifford only: run the rotation-merging pre-pass. */
  bool merge = false;

  /** Clifford only: within each commuting rotation group, always extract
   *  the rotation whose current conjugated axis needs the smallest
   *  Steiner tree. */
  bool reorder = false;

  /** Carried-over final operator from a previous routing round; the output
   *  then satisfies U(input) * ⟦initial⟧ = ⟦final⟧ * U(output). */
  std::optional<Tracker> initial;

  /** Dense-check the loop invariant after every processed gate and once at
   *  completion. Only available up to the dense simulation width cap. */
  bool check_invariant = false;
};

struct RouteMetrics {
  std::uint64_t in_cnot = 0;   ///< CNOT-equivalent input count (SWAP = 3)
  std::uint64_t out_cnot = 0;  ///< CNOT-equivalent output count
  std::uint64_t in_2q = 0;     ///< raw two-qubit input gate count
  std::uint64_t out_2q = 0;    ///< raw two-qubit output gate count
  double wall_ms = 0.0;
};

/**
 * Result of a routing run. Every multi-wire gate of `circuit` lies on a
 * coupling edge, and ⟦final_operator⟧ * U(circuit) equals U(input) (times
 * ⟦initial⟧ on the right when one was carried in).
 */
struct RoutedOutput {
  Circuit circuit;
  Tracker final_operator;
  RouteMetrics metrics;
};

/**
 * Routes `c` onto the coupling graph: gates in the method's deferrable
 * subgroup are absorbed into the tracker, every other gate forces the
 * emission of a compliant subcircuit chosen by finite-depth search.
 *
 * The circuit may be narrower than the graph; it is padded. Gate kinds
 * must be admissible for the method: swap takes any gate on at most two
 * wires, linear takes one-wire gates plus CNOT/SWAP, clifford takes
 * Clifford gates plus Rz/T/Tdg and Pauli rotations.
 */
RoutedOutput route(const Circuit& c, const CouplingGraph& g, const RouteOptions& opts = {});

// The pieces below are the router's building blocks, exposed for tests.

/** One way of making a two-wire gate compliant: the SWAP chain to emit,
 *  the physical wires the gate lands on, and the permutation after the
 *  chain. */
struct SwapCandidate {
  std::vector<std::pair<Qubit, Qubit>> swaps;
  std::pair<Qubit, Qubit> placement;
  Permutation sigma;
};

/**
 * Enumerates the meeting points along the deterministic shortest path
 * between σ⁻¹(a) and σ⁻¹(b): a path with k vertices yields k−1 candidates,
 * the j-th moving both contents onto the path's j-th edge with k−2 SWAPs
 * (the a side first). Already adjacent contents yield one swap-free
 * candidate.
 */
std::vector<SwapCandidate> swap_candidates(const Permutation& sigma, Qubit a, Qubit b,
                                           const CouplingGraph& g);

struct SwapStep {
  Permutation sigma;
  Circuit emitted;
};

/** Places the two-wire gate pending[pos]; later entangling gates feed the
 *  depth-w lookahead. `emitted` holds the SWAP chain plus the relocated
 *  gate. */
SwapStep extract_swap(const Permutation& sigma, const std::vector<Gate>& pending, std::size_t pos,
                      const CouplingGraph& g, std::uint32_t depth);

struct LinearCandidate {
  LinearTable table;
  Circuit emitted;
  Qubit placement;
};

/**
 * All ways of landing a one-wire gate on behalf of table row q: one
 * candidate per set column of the row, each built from a fan-in along a
 * Steiner tree rooted there (plus, for non-diagonal gates, a fan-out that
 * clears the q-th column of the inverse), mirrored into the table.
 */
std::vector<LinearCandidate> linear_candidates(const LinearTable& a, const Gate& gate,
                                               const CouplingGraph& g);

struct LinearStep {
  LinearTable table;
  Circuit emitted;
};

LinearStep extract_linear(const LinearTable& a, const std::vector<Gate>& pending, std::size_t pos,
                          const CouplingGraph& g, std::uint32_t depth);

struct CliffordCandidate {
  CliffordTableau tableau;
  Circuit emitted;
  Qubit placement;
};

/**
 * All ways of landing a non-Clifford rotation: its axis is conjugated
 * through T (sign folded into the angle), then one candidate per support
 * wire, each emitting local diagonalizers, a fan-in along a Steiner tree
 * rooted there, and the Z rotation itself; the Clifford prefix is folded
 * back into the tableau.
 */
std::vector<CliffordCandidate> clifford_candidates(const CliffordTableau& t, const Gate& rot,
                                                   const CouplingGraph& g);

struct CliffordStep {
  CliffordTableau tableau;
  Circuit emitted;
};

CliffordStep extract_clifford(const CliffordTableau& t, const std::vector<Gate>& pending,
                              std::size_t pos, const CouplingGraph& g, std::uint32_t depth);

/** Index of the rotation in `group` whose current conjugated axis needs
 *  the fewest Steiner-tree edges; ties go to the earliest entry. */
std::size_t pick_cheapest_rotation(const CliffordTableau& t, const std::vector<Gate>& group,
                                   const CouplingGraph& g);

}  // namespace lazyroute
