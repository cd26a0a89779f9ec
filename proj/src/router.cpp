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

#include "lazyroute/router.hpp"

#include <chrono>
#include <limits>
#include <utility>
#include <variant>

#include "lazyroute/prepass.hpp"
#include "lazyroute/search.hpp"
#include "lazyroute/synth.hpp"
#include "lazyroute/verify.hpp"

namespace lazyroute {

namespace {

Qubit preimage(const Permutation& sigma, Qubit q) {
  for (Qubit i = 0; i < sigma.size(); ++i)
    if (sigma(i) == q) return i;
  detail::fail("permutation preimage not found");
}

PauliString rotation_axis(const Gate& rot, std::uint32_t n) {
  if (rot.kind == GateKind::Rz) return PauliString::single(n, rot.qubits[0], PauliLetter::Z);
  detail::require(rot.kind == GateKind::PauliRot, "expected a rotation gate, got " + rot.str());
  detail::require(rot.axis->size() == n, "rotation axis width differs from the register");
  return *rot.axis;
}

// One node of the lookahead tree for each method: the tracker reached so
// far plus the cursor into the pending gate list. Gates the method can
// absorb are folded into the node while advancing the cursor, so each
// search level corresponds to one extraction-forcing gate.

struct SwapNode {
  Permutation sigma;
  std::size_t pos;
};

std::uint64_t swap_gate_cost(const Gate& g) { return g.kind == GateKind::CNOT ? 1 : 0; }

std::vector<SearchBranch<SwapNode>> swap_branches(SwapNode node, const std::vector<Gate>& pending,
                                                  const CouplingGraph& g) {
  while (node.pos < pending.size()) {
    const Gate& gt = pending[node.pos];
    if (gt.kind == GateKind::Swap) {
      node.sigma = perm_update_swap(node.sigma, gt.qubits[0], gt.qubits[1]);
      ++node.pos;
      continue;
    }
    if (gt.num_qubits() < 2) {
      ++node.pos;
      continue;
    }
    break;
  }
  if (node.pos >= pending.size()) return {};
  const Gate& gate = pending[node.pos];
  std::vector<SwapCandidate> cands = swap_candidates(node.sigma, gate.qubits[0], gate.qubits[1], g);
  std::vector<SearchBranch<SwapNode>> out;
  out.reserve(cands.size());
  for (SwapCandidate& cand : cands) {
    const std::uint64_t cost = 3 * cand.swaps.size() + swap_gate_cost(gate);
    out.push_back({SwapNode{std::move(cand.sigma), node.pos + 1}, cost});
  }
  return out;
}

struct LinearNode {
  LinearTable table;
  std::size_t pos;
};

std::vector<SearchBranch<LinearNode>> linear_branches(LinearNode node,
                                                      const std::vector<Gate>& pending,
                                                      const CouplingGraph& g) {
  while (node.pos < pending.size()) {
    const Gate& gt = pending[node.pos];
    if (gt.kind == GateKind::CNOT) {
      node.table.absorb_cnot(gt.qubits[0], gt.qubits[1]);
      ++node.pos;
      continue;
    }
    if (gt.kind == GateKind::Swap) {
      node.table.absorb_swap(gt.qubits[0], gt.qubits[1]);
      ++node.pos;
      continue;
    }
    break;
  }
  if (node.pos >= pending.size()) return {};
  std::vector<LinearCandidate> cands = linear_candidates(node.table, pending[node.pos], g);
  std::vector<SearchBranch<LinearNode>> out;
  out.reserve(cands.size());
  for (LinearCandidate& cand : cands) {
    const std::uint64_t cost = count_cnots(cand.emitted, CountMode::CnotEquivalent);
    out.push_back({LinearNode{std::move(cand.table), node.pos + 1}, cost});
  }
  return out;
}

struct CliffordNode {
  CliffordTableau tableau;
  std::size_t pos;
};

std::vector<SearchBranch<CliffordNode>> clifford_branches(CliffordNode node,
                                                          const std::vector<Gate>& pending,
                                                          const CouplingGraph& g) {
  while (node.pos < pending.size() && pending[node.pos].is_clifford()) {
    node.tableau.left_mul(pending[node.pos]);
    ++node.pos;
  }
  if (node.pos >= pending.size()) return {};
  std::vector<CliffordCandidate> cands = clifford_candidates(node.tableau, pending[node.pos], g);
  std::vector<SearchBranch<CliffordNode>> out;
  out.reserve(cands.size());
  for (CliffordCandidate& cand : cands) {
    const std::uint64_t cost = count_cnots(cand.emitted, CountMode::CnotEquivalent);
    out.push_back({CliffordNode{std::move(cand.tableau), node.pos + 1}, cost});
  }
  return out;
}

void validate_gates(const Circuit& c, Method method) {
  for (const Gate& g : c.gates) {
    switch (method) {
      case Method::Swap:
        detail::require(g.num_qubits() <= 2,
                        "swap method takes gates on at most two wires, got " + g.str());
        break;
      case Method::Linear:
        detail::require(
            g.num_qubits() == 1 || g.kind == GateKind::CNOT || g.kind == GateKind::Swap,
            "linear method takes one-wire gates plus CNOT and SWAP, got " + g.str());
        break;
      case Method::Clifford:
        break;
    }
  }
}

// Tracks the prefix of processed gates so the loop invariant
// U(prefix) * ⟦h0⟧ = ⟦h⟧ * U(output) can be dense-checked after each step.
class InvariantChecker {
 public:
  InvariantChecker(bool enabled, Qubit n, Tracker h0)
      : enabled_(enabled), prefix_(n), h0_(std::move(h0)) {}

  void step(const Gate& processed, const Tracker& h, const Circuit& out) {
    if (!enabled_) return;
    prefix_.append(processed);
    detail::require(equivalent_up_to(h, h0_, prefix_, out), "routing loop invariant violated");
  }

 private:
  bool enabled_;
  Circuit prefix_;
  Tracker h0_;
};

RoutedOutput route_swap(const Circuit& in, const CouplingGraph& g, std::uint32_t depth,
                        const RouteOptions& opts) {
  const Qubit n = in.n_qubits;
  Permutation sigma = Permutation::identity(n);
  if (opts.initial) {
    const auto* p = std::get_if<Permutation>(&*opts.initial);
    detail::require(p != nullptr, "swap routing takes a permutation initial operator");
    detail::require(p->size() == n, "initial operator width differs from the graph");
    sigma = *p;
  }
  InvariantChecker checker(opts.check_invariant, n, Tracker(sigma));
  Circuit out(n);
  const std::vector<Gate>& gates = in.gates;
  for (std::size_t pos = 0; pos < gates.size(); ++pos) {
    const Gate& gt = gates[pos];
    if (gt.kind == GateKind::Swap) {
      sigma = perm_update_swap(sigma, gt.qubits[0], gt.qubits[1]);
    } else if (gt.num_qubits() == 1) {
      out.append(gt.relabeled([&](Qubit q) { return preimage(sigma, q); }));
    } else {
      SwapStep step = extract_swap(sigma, gates, pos, g, depth);
      out.extend(step.emitted);
      sigma = std::move(step.sigma);
    }
    checker.step(gt, Tracker(sigma), out);
  }
  return RoutedOutput{std::move(out), Tracker(std::move(sigma)), {}};
}

RoutedOutput route_linear(const Circuit& in, const CouplingGraph& g, std::uint32_t depth,
                          const RouteOptions& opts) {
  const Qubit n = in.n_qubits;
  LinearTable table = LinearTable::identity(n);
  if (opts.initial) {
    detail::require(tracker_size(*opts.initial) == n,
                    "initial operator width differs from the graph");
    if (const auto* p = std::get_if<Permutation>(&*opts.initial)) {
      table = LinearTable::from_permutation(*p);
    } else if (const auto* a = std::get_if<LinearTable>(&*opts.initial)) {
      table = *a;
    } else {
      detail::fail("linear routing takes a permutation or linear initial operator");
    }
  }
  InvariantChecker checker(opts.check_invariant, n, Tracker(table));
  Circuit out(n);
  const std::vector<Gate>& gates = in.gates;
  for (std::size_t pos = 0; pos < gates.size(); ++pos) {
    const Gate& gt = gates[pos];
    if (gt.kind == GateKind::CNOT) {
      table.absorb_cnot(gt.qubits[0], gt.qubits[1]);
    } else if (gt.kind == GateKind::Swap) {
      table.absorb_swap(gt.qubits[0], gt.qubits[1]);
    } else {
      LinearStep step = extract_linear(table, gates, pos, g, depth);
      out.extend(step.emitted);
      table = std::move(step.table);
    }
    checker.step(gt, Tracker(table), out);
  }
  return RoutedOutput{std::move(out), Tracker(std::move(table)), {}};
}

RoutedOutput route_clifford(const Circuit& in, const CouplingGraph& g, std::uint32_t depth,
                            const RouteOptions& opts) {
  const Qubit n = in.n_qubits;
  CliffordTableau t = CliffordTableau::identity(n);
  if (opts.initial) {
    detail::require(tracker_size(*opts.initial) == n,
                    "initial operator width differs from the graph");
    t = tracker_tableau(*opts.initial);
  }
  const Tracker h0 = Tracker(t);
  Circuit out(n);

  if (!opts.merge && !opts.reorder) {
    std::vector<Gate> pending;
    pending.reserve(in.gates.size());
    for (const Gate& gt : in.gates) pending.push_back(as_rotation_gate(gt));
    InvariantChecker checker(opts.check_invariant, n, h0);
    for (std::size_t pos = 0; pos < pending.size(); ++pos) {
      const Gate& gt = pending[pos];
      if (gt.is_clifford()) {
        t.left_mul(gt);
      } else {
        CliffordStep step = extract_clifford(t, pending, pos, g, depth);
        out.extend(step.emitted);
        t = std::move(step.tableau);
      }
      checker.step(gt, Tracker(t), out);
    }
    return RoutedOutput{std::move(out), Tracker(std::move(t)), {}};
  }

  RotationSequence seq = normalize(in);
  if (opts.merge) seq = merge_rotations(std::move(seq));
  // The checker sees the rotation word in processed order; the trailing
  // operator is accounted for by the final whole-circuit check in route().
  InvariantChecker checker(opts.check_invariant, n, h0);
  if (opts.reorder) {
    std::vector<std::vector<Gate>> groups = group_rotations(seq);
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      std::vector<Gate>& remaining = groups[gi];
      while (!remaining.empty()) {
        const std::size_t pick = pick_cheapest_rotation(t, remaining, g);
        std::vector<Gate> pending;
        pending.reserve(seq.rotations.size());
        pending.push_back(remaining[pick]);
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (i != pick) pending.push_back(remaining[i]);
        for (std::size_t gj = gi + 1; gj < groups.size(); ++gj)
          pending.insert(pending.end(), groups[gj].begin(), groups[gj].end());
        CliffordStep step = extract_clifford(t, pending, 0, g, depth);
        out.extend(step.emitted);
        t = std::move(step.tableau);
        checker.step(remaining[pick], Tracker(t), out);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
      }
    }
  } else {
    for (std::size_t pos = 0; pos < seq.rotations.size(); ++pos) {
      CliffordStep step = extract_clifford(t, seq.rotations, pos, g, depth);
      out.extend(step.emitted);
      t = std::move(step.tableau);
      checker.step(seq.rotations[pos], Tracker(t), out);
    }
  }
  CliffordTableau final_op = CliffordTableau::compose(seq.trailing, t);
  return RoutedOutput{std::move(out), Tracker(std::move(final_op)), {}};
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Swap:
      return "swap";
    case Method::Linear:
      return "linear";
    case Method::Clifford:
      return "clifford";
  }
  detail::fail("unknown method");
}

Method parse_method(const std::string& name) {
  if (name == "swap") return Method::Swap;
  if (name == "linear") return Method::Linear;
  if (name == "clifford") return Method::Clifford;
  detail::fail("unknown method '" + name + "' (expected swap, linear, or clifford)");
}

std::uint32_t default_depth(Method m) {
  switch (m) {
    case Method::Swap:
      return 4;
    case Method::Linear:
      return 3;
    case Method::Clifford:
      return 3;
  }
  detail::fail("unknown method");
}

std::vector<SwapCandidate> swap_candidates(const Permutation& sigma, Qubit a, Qubit b,
                                           const CouplingGraph& g) {
  detail::require(sigma.size() == g.n_vertices(), "permutation width differs from the graph");
  detail::require(a != b && a < sigma.size() && b < sigma.size(), "bad gate wires");
  const std::vector<std::uint32_t> path = g.shortest_path(preimage(sigma, a), preimage(sigma, b));
  const std::size_t k = path.size();
  std::vector<SwapCandidate> out;
  out.reserve(k - 1);
  for (std::size_t j = 1; j <= k - 1; ++j) {
    SwapCandidate cand;
    Permutation s = sigma;
    for (std::size_t i = 1; i < j; ++i) {
      cand.swaps.emplace_back(path[i - 1], path[i]);
      s = perm_mirror_swap(s, path[i - 1], path[i]);
    }
    for (std::size_t i = k; i >= j + 2; --i) {
      cand.swaps.emplace_back(path[i - 1], path[i - 2]);
      s = perm_mirror_swap(s, path[i - 1], path[i - 2]);
    }
    cand.placement = {path[j - 1], path[j]};
    cand.sigma = std::move(s);
    out.push_back(std::move(cand));
  }
  return out;
}

SwapStep extract_swap(const Permutation& sigma, const std::vector<Gate>& pending, std::size_t pos,
                      const CouplingGraph& g, std::uint32_t depth) {
  detail::require(pos < pending.size(), "extraction cursor out of range");
  const Gate& gate = pending[pos];
  detail::require(gate.num_qubits() == 2 && gate.kind != GateKind::Swap,
                  "swap extraction needs a two-wire non-SWAP gate");
  const Qubit n = g.n_vertices();
  std::vector<SwapCandidate> cands = swap_candidates(sigma, gate.qubits[0], gate.qubits[1], g);
  std::vector<SearchBranch<SwapNode>> branches;
  std::vector<Circuit> words;
  branches.reserve(cands.size());
  words.reserve(cands.size());
  for (SwapCandidate& cand : cands) {
    Circuit word(n);
    for (const auto& [u, v] : cand.swaps) word.append(Gate::swap(u, v));
    const Qubit first = gate.qubits[0];
    word.append(gate.relabeled(
        [&](Qubit q) { return q == first ? cand.placement.first : cand.placement.second; }));
    branches.push_back(
        {SwapNode{std::move(cand.sigma), pos + 1}, count_cnots(word, CountMode::CnotEquivalent)});
    words.push_back(std::move(word));
  }
  const auto expand = [&pending, &g](const SwapNode& node) {
    return swap_branches(node, pending, g);
  };
  const SearchResult res = recursive_search(branches, expand, depth);
  return SwapStep{std::move(branches[res.index].state.sigma), std::move(words[res.index])};
}

std::vector<LinearCandidate> linear_candidates(const LinearTable& a, const Gate& gate,
                                               const CouplingGraph& g) {
  detail::require(a.size() == g.n_vertices(), "table width differs from the graph");
  detail::require(gate.num_qubits() == 1, "linear extraction needs a one-wire gate");
  const std::uint32_t n = a.size();
  const Qubit q = gate.qubits[0];
  const std::vector<std::uint32_t> terminals = a.row(q).support();
  const bool diagonal = gate.is_diagonal();
  std::vector<LinearCandidate> out;
  out.reserve(terminals.size());
  for (const std::uint32_t root : terminals) {
    LinearTable table = a;
    Circuit emitted(n);
    const SteinerTree tree = steiner_tree(g, terminals, root);
    for (const Gate& cg : fan_in(tree)) {
      emitted.append(cg);
      table.mirror_cnot(cg.qubits[0], cg.qubits[1]);
    }
    detail::require(table.row(q).popcount() == 1 && table.row(q).get(root),
                    "fan-in failed to isolate the target row");
    if (!diagonal) {
      std::vector<std::uint32_t> marked;
      for (std::uint32_t r = 0; r < n; ++r)
        if (table.get_inv(r, q)) marked.push_back(r);
      const SteinerTree spread = steiner_tree(g, marked, root);
      for (const Gate& cg : fan_out(spread)) {
        emitted.append(cg);
        table.mirror_cnot(cg.qubits[0], cg.qubits[1]);
      }
      for (std::uint32_t r = 0; r < n; ++r)
        detail::require(table.get_inv(r, q) == (r == root),
                        "fan-out failed to clear the inverse column");
    }
    emitted.append(gate.relabeled([root](Qubit) { return root; }));
    out.push_back(LinearCandidate{std::move(table), std::move(emitted), root});
  }
  return out;
}

LinearStep extract_linear(const LinearTable& a, const std::vector<Gate>& pending, std::size_t pos,
                          const CouplingGraph& g, std::uint32_t depth) {
  detail::require(pos < pending.size(), "extraction cursor out of range");
  std::vector<LinearCandidate> cands = linear_candidates(a, pending[pos], g);
  std::vector<SearchBranch<LinearNode>> branches;
  std::vector<Circuit> words;
  branches.reserve(cands.size());
  words.reserve(cands.size());
  for (LinearCandidate& cand : cands) {
    branches.push_back({LinearNode{std::move(cand.table), pos + 1},
                        count_cnots(cand.emitted, CountMode::CnotEquivalent)});
    words.push_back(std::move(cand.emitted));
  }
  const auto expand = [&pending, &g](const LinearNode& node) {
    return linear_branches(node, pending, g);
  };
  const SearchResult res = recursive_search(branches, expand, depth);
  return LinearStep{std::move(branches[res.index].state.table), std::move(words[res.index])};
}

std::vector<CliffordCandidate> clifford_candidates(const CliffordTableau& t, const Gate& rot,
                                                   const CouplingGraph& g) {
  detail::require(t.size() == g.n_vertices(), "tableau width differs from the graph");
  detail::require(!rot.is_clifford(), "clifford extraction needs a non-Clifford rotation");
  const std::uint32_t n = t.size();
  Angle theta = rot.angle;
  PauliString conj =
      t.conjugate(rotation_axis(rot, n), CliffordTableau::Direction::Inverse);
  if (conj.negative()) {
    conj.set_negative(false);
    theta = -theta;
  }
  const std::vector<Qubit> supp = conj.support();
  const std::vector<Gate> locals = diagonalize_local(conj);
  std::vector<CliffordCandidate> out;
  out.reserve(supp.size());
  for (const Qubit root : supp) {
    CliffordTableau tableau = t;
    Circuit emitted(n);
    for (const Gate& lg : locals) {
      emitted.append(lg);
      tableau.right_mul_inverse(lg);
    }
    const SteinerTree tree = steiner_tree(g, supp, root);
    for (const Gate& cg : fan_in(tree)) {
      emitted.append(cg);
      tableau.right_mul_inverse(cg);
    }
    emitted.append(Gate::rz(root, theta));
    out.push_back(CliffordCandidate{std::move(tableau), std::move(emitted), root});
  }
  return out;
}

CliffordStep extract_clifford(const CliffordTableau& t, const std::vector<Gate>& pending,
                              std::size_t pos, const CouplingGraph& g, std::uint32_t depth) {
  detail::require(pos < pending.size(), "extraction cursor out of range");
  std::vector<CliffordCandidate> cands = clifford_candidates(t, pending[pos], g);
  std::vector<SearchBranch<CliffordNode>> branches;
  std::vector<Circuit> words;
  branches.reserve(cands.size());
  words.reserve(cands.size());
  for (CliffordCandidate& cand : cands) {
    branches.push_back({CliffordNode{std::move(cand.tableau), pos + 1},
                        count_cnots(cand.emitted, CountMode::CnotEquivalent)});
    words.push_back(std::move(cand.emitted));
  }
  const auto expand = [&pending, &g](const CliffordNode& node) {
    return clifford_branches(node, pending, g);
  };
  const SearchResult res = recursive_search(branches, expand, depth);
  return CliffordStep{std::move(branches[res.index].state.tableau), std::move(words[res.index])};
}

std::size_t pick_cheapest_rotation(const CliffordTableau& t, const std::vector<Gate>& group,
                                   const CouplingGraph& g) {
  detail::require(!group.empty(), "empty rotation group");
  std::size_t best = 0;
  std::size_t best_edges = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < group.size(); ++i) {
    const PauliString conj =
        t.conjugate(rotation_axis(group[i], t.size()), CliffordTableau::Direction::Inverse);
    const std::size_t edges = steiner_tree(g, conj.support()).edges.size();
    if (edges < best_edges) {
      best = i;
      best_edges = edges;
    }
  }
  return best;
}

RoutedOutput route(const Circuit& c, const CouplingGraph& g, const RouteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  detail::require(c.n_qubits <= g.n_vertices(), "circuit is wider than the coupling graph");
  detail::require(opts.method == Method::Clifford || (!opts.merge && !opts.reorder),
                  "merge and reorder apply to the clifford method only");
  if (opts.check_invariant)
    detail::require(g.n_vertices() <= dense_qubit_cap(),
                    "invariant checking needs the width within the dense simulation cap");
  const Circuit in = c.padded(g.n_vertices());
  validate_gates(in, opts.method);
  const std::uint32_t depth = opts.depth ? *opts.depth : default_depth(opts.method);

  RoutedOutput result;
  switch (opts.method) {
    case Method::Swap:
      result = route_swap(in, g, depth, opts);
      break;
    case Method::Linear:
      result = route_linear(in, g, depth, opts);
      break;
    case Method::Clifford:
      result = route_clifford(in, g, depth, opts);
      break;
  }

  if (opts.check_invariant) {
    Tracker h0 = opts.initial ? *opts.initial : result.final_operator;
    if (!opts.initial) {
      // Same-kind identity as the final operator.
      const std::uint32_t n = g.n_vertices();
      if (std::holds_alternative<Permutation>(result.final_operator))
        h0 = Permutation::identity(n);
      else if (std::holds_alternative<LinearTable>(result.final_operator))
        h0 = LinearTable::identity(n);
      else
        h0 = CliffordTableau::identity(n);
    }
    detail::require(equivalent_up_to(result.final_operator, h0, in, result.circuit),
                    "routing invariant violated at completion");
  }

  result.metrics.in_cnot = count_cnots(in, CountMode::CnotEquivalent);
  result.metrics.in_2q = count_cnots(in, CountMode::Raw2q);
  result.metrics.out_cnot = count_cnots(result.circuit, CountMode::CnotEquivalent);
  result.metrics.out_2q = count_cnots(result.circuit, CountMode::Raw2q);
  result.metrics.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace lazyroute
