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

#include "lazyroute/synth.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lazyroute {

namespace {

using Adjacency = std::map<std::uint32_t, std::set<std::uint32_t>>;

Adjacency tree_adjacency(const SteinerTree& tree) {
  Adjacency adj;
  for (std::uint32_t v : tree.vertices) adj[v];
  for (auto [a, b] : tree.edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  return adj;
}

/** Lowest-index leaf other than the root; requires one to exist. */
std::uint32_t lowest_leaf(const Adjacency& adj, std::uint32_t root) {
  for (const auto& [v, nb] : adj)
    if (v != root && nb.size() == 1) return v;
  detail::fail("tree has no peelable leaf");
}

void remove_leaf(Adjacency& adj, std::uint32_t v) {
  std::uint32_t u = *adj[v].begin();
  adj[u].erase(v);
  adj.erase(v);
}

}  // namespace

std::vector<Gate> fan_in(const SteinerTree& tree) {
  std::vector<Gate> word;
  Adjacency adj = tree_adjacency(tree);
  std::set<std::uint32_t> carrying(tree.terminals.begin(), tree.terminals.end());
  while (adj.size() > 1) {
    std::uint32_t v = lowest_leaf(adj, tree.root);
    std::uint32_t u = *adj[v].begin();
    if (!carrying.count(u)) {
      // The neighbour holds no partial parity; a preliminary CNOT lets the
      // merge below hand it the leaf's accumulated parity exactly.
      word.push_back(Gate::cnot(u, v));
      carrying.insert(u);
    }
    word.push_back(Gate::cnot(v, u));
    remove_leaf(adj, v);
  }
  return word;
}

std::vector<Gate> fan_out(const SteinerTree& tree) {
  detail::require(tree.is_terminal(tree.root), "fan_out root must be marked");
  std::vector<Gate> word;
  std::set<std::uint32_t> marked(tree.terminals.begin(), tree.terminals.end());

  Adjacency adj = tree_adjacency(tree);
  while (adj.size() > 1) {
    std::uint32_t v = lowest_leaf(adj, tree.root);
    std::uint32_t u = *adj[v].begin();
    if (!marked.count(u)) {
      word.push_back(Gate::cnot(v, u));
      marked.insert(u);
    }
    remove_leaf(adj, v);
  }

  adj = tree_adjacency(tree);
  while (adj.size() > 1) {
    std::uint32_t v = lowest_leaf(adj, tree.root);
    std::uint32_t u = *adj[v].begin();
    word.push_back(Gate::cnot(u, v));
    remove_leaf(adj, v);
  }
  return word;
}

}  // namespace lazyroute
