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

#include "lazyroute/coupling_graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>

namespace lazyroute {

namespace {
constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
}

CouplingGraph::CouplingGraph(std::uint32_t n_vertices,
                             const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges)
    : n_(n_vertices), adj_(n_vertices), adj_matrix_(std::size_t{n_vertices} * n_vertices, 0) {
  detail::require(n_ > 0, "coupling graph needs at least one vertex");
  for (auto [u, v] : edges) {
    detail::require(u < n_ && v < n_ && u != v, "bad edge in coupling graph");
    if (has_edge(u, v)) continue;
    adj_matrix_[u * n_ + v] = adj_matrix_[v * n_ + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  std::sort(edges_.begin(), edges_.end());

  dist_.assign(std::size_t{n_} * n_, kUnreached);
  for (std::uint32_t s = 0; s < n_; ++s) {
    auto* d = &dist_[std::size_t{s} * n_];
    std::deque<std::uint32_t> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t u : adj_[v])
        if (d[u] == kUnreached) {
          d[u] = d[v] + 1;
          queue.push_back(u);
        }
    }
    for (std::uint32_t v = 0; v < n_; ++v)
      detail::require(d[v] != kUnreached, "coupling graph must be connected");
  }
}

std::vector<std::uint32_t> CouplingGraph::shortest_path(std::uint32_t a, std::uint32_t b) const {
  detail::require(a < n_ && b < n_, "shortest_path vertex out of range");
  // Greedy descent on distance-to-b; picking the smallest admissible
  // neighbor at each step yields the lexicographically smallest sequence.
  std::vector<std::uint32_t> path{a};
  std::uint32_t cur = a;
  while (cur != b) {
    std::uint32_t want = dist(cur, b) - 1;
    for (std::uint32_t u : adj_[cur])
      if (dist(u, b) == want) {
        path.push_back(u);
        cur = u;
        break;
      }
  }
  return path;
}

CouplingGraph CouplingGraph::parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (!have_header) {
      long long count = -1;
      if (first == "qubits" && (ls >> count) && count > 0) {
        n = static_cast<std::uint32_t>(count);
        have_header = true;
        continue;
      }
      detail::fail("graph file line " + std::to_string(lineno) + ": expected 'qubits N' header");
    }
    long long u = -1, v = -1;
    try {
      u = std::stoll(first);
    } catch (const std::exception&) {
      u = -1;
    }
    if (u < 0 || !(ls >> v) || v < 0)
      detail::fail("graph file line " + std::to_string(lineno) + ": expected 'u v' edge");
    std::string rest;
    if (ls >> rest)
      detail::fail("graph file line " + std::to_string(lineno) + ": trailing tokens");
    edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  detail::require(have_header, "graph file has no 'qubits N' header");
  return CouplingGraph(n, edges);
}

CouplingGraph CouplingGraph::load_graph_file(const std::string& path) {
  std::ifstream in(path);
  detail::require(in.good(), "cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_file(buf.str());
}

namespace {

using Edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

CouplingGraph make_grid(std::uint32_t rows, std::uint32_t cols) {
  Edges edges;
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) {
      std::uint32_t v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  return CouplingGraph(rows * cols, edges);
}

CouplingGraph make_lnn(std::uint32_t n) {
  Edges edges;
  for (std::uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return CouplingGraph(n, edges);
}

CouplingGraph make_all2all(std::uint32_t n) {
  Edges edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return CouplingGraph(n, edges);
}

// 14-qubit device: a 2x7 ladder traversed as a horseshoe, plus the
// pendant vertex 7 hanging off 8.
CouplingGraph make_melbourne() {
  Edges edges = {{0, 1}, {1, 2},  {2, 3},  {3, 4},   {4, 5},   {5, 6},
                 {6, 8}, {8, 9},  {9, 10}, {10, 11}, {11, 12}, {12, 13},
                 {13, 1}, {2, 12}, {3, 11}, {4, 10},  {5, 9},   {8, 7}};
  return CouplingGraph(14, edges);
}

// 16-qubit device: two octagonal rings bridged by two rungs.
CouplingGraph make_aspen() {
  Edges edges;
  for (std::uint32_t v = 0; v < 8; ++v) edges.emplace_back(v, (v + 1) % 8);
  for (std::uint32_t v = 0; v < 8; ++v) edges.emplace_back(8 + v, 8 + (v + 1) % 8);
  edges.emplace_back(2, 13);
  edges.emplace_back(1, 14);
  return CouplingGraph(16, edges);
}

std::uint32_t parse_positive(const std::string& text, const std::string& what) {
  detail::require(!text.empty() && text.find_first_not_of("0123456789") == std::string::npos,
                  "bad " + what + " '" + text + "'");
  long long v = std::stoll(text);
  detail::require(v > 0, what + " must be positive");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

CouplingGraph CouplingGraph::preset(const std::string& name) {
  if (name == "melbourne") return make_melbourne();
  if (name == "aspen") return make_aspen();
  if (name.rfind("grid:", 0) == 0) {
    std::string dims = name.substr(5);
    auto x = dims.find('x');
    detail::require(x != std::string::npos, "grid preset needs RxC dimensions: " + name);
    return make_grid(parse_positive(dims.substr(0, x), "grid rows"),
                     parse_positive(dims.substr(x + 1), "grid cols"));
  }
  if (name.rfind("lnn:", 0) == 0) return make_lnn(parse_positive(name.substr(4), "lnn size"));
  if (name.rfind("all2all:", 0) == 0)
    return make_all2all(parse_positive(name.substr(8), "all2all size"));
  if (name.rfind("file:", 0) == 0) return load_graph_file(name.substr(5));
  detail::fail("unknown architecture '" + name +
               "' (expected melbourne, aspen, grid:RxC, lnn:N, all2all:N, or file:<path>)");
}

bool SteinerTree::contains(std::uint32_t v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool SteinerTree::is_terminal(std::uint32_t v) const {
  return std::binary_search(terminals.begin(), terminals.end(), v);
}

std::vector<std::uint32_t> SteinerTree::neighbors(std::uint32_t v) const {
  std::vector<std::uint32_t> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SteinerTree::is_valid_for(const CouplingGraph& g) const {
  if (vertices.empty() || terminals.empty()) return false;
  if (!contains(root) || !is_terminal(root)) return false;
  if (edges.size() + 1 != vertices.size()) return false;
  for (auto [a, b] : edges)
    if (!contains(a) || !contains(b) || !g.has_edge(a, b)) return false;
  for (std::uint32_t t : terminals)
    if (!contains(t)) return false;
  // Connectivity over tree edges.
  std::vector<std::uint32_t> stack{vertices[0]};
  std::vector<std::uint32_t> seen;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
    seen.push_back(v);
    for (std::uint32_t u : neighbors(v)) stack.push_back(u);
  }
  if (seen.size() != vertices.size()) return false;
  // Every leaf is a terminal.
  for (std::uint32_t v : vertices)
    if (neighbors(v).size() <= 1 && !is_terminal(v) && vertices.size() > 1) return false;
  return true;
}

SteinerTree steiner_tree(const CouplingGraph& g, const std::vector<std::uint32_t>& terminals,
                         std::uint32_t root) {
  detail::require(!terminals.empty(), "steiner_tree needs at least one terminal");
  SteinerTree tree;
  tree.terminals = terminals;
  std::sort(tree.terminals.begin(), tree.terminals.end());
  tree.terminals.erase(std::unique(tree.terminals.begin(), tree.terminals.end()),
                       tree.terminals.end());
  for (std::uint32_t t : tree.terminals)
    detail::require(t < g.n_vertices(), "steiner terminal out of range");
  detail::require(tree.is_terminal(root), "steiner root must be a terminal");

  tree.root = root;
  tree.vertices = {tree.root};

  std::vector<std::uint32_t> remaining;
  for (std::uint32_t t : tree.terminals)
    if (t != root) remaining.push_back(t);
  while (!remaining.empty()) {
    // Nearest remaining terminal to the tree; ties prefer the smaller
    // terminal, then the smaller attachment vertex.
    std::uint32_t best_t = 0, best_v = 0, best_d = kUnreached;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < remaining.size(); ++i)
      for (std::uint32_t v : tree.vertices) {
        std::uint32_t d = g.dist(v, remaining[i]);
        if (d < best_d || (d == best_d && (remaining[i] < best_t ||
                                           (remaining[i] == best_t && v < best_v)))) {
          best_d = d;
          best_t = remaining[i];
          best_v = v;
          best_i = i;
        }
      }
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_i));
    if (best_d == 0) continue;  // already swallowed by an earlier path

    // Attach along the shortest path, keeping only the suffix after the
    // last vertex that is already in the tree so no cycle forms.
    std::vector<std::uint32_t> path = g.shortest_path(best_v, best_t);
    std::size_t start = 0;
    for (std::size_t j = 0; j < path.size(); ++j)
      if (tree.contains(path[j])) start = j;
    for (std::size_t j = start + 1; j < path.size(); ++j) {
      tree.vertices.push_back(path[j]);
      tree.edges.emplace_back(std::min(path[j - 1], path[j]), std::max(path[j - 1], path[j]));
    }
    std::sort(tree.vertices.begin(), tree.vertices.end());
  }

  // Prune any non-terminal leaves (defensive; construction should not
  // produce them).
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t v : tree.vertices) {
      if (tree.is_terminal(v)) continue;
      auto nb = tree.neighbors(v);
      if (nb.size() == 1 && tree.vertices.size() > 1) {
        tree.vertices.erase(std::find(tree.vertices.begin(), tree.vertices.end(), v));
        auto e = std::make_pair(std::min(v, nb[0]), std::max(v, nb[0]));
        tree.edges.erase(std::find(tree.edges.begin(), tree.edges.end(), e));
        changed = true;
        break;
      }
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

SteinerTree steiner_tree(const CouplingGraph& g, const std::vector<std::uint32_t>& terminals) {
  detail::require(!terminals.empty(), "steiner_tree needs at least one terminal");
  std::uint32_t root = *std::min_element(terminals.begin(), terminals.end());
  return steiner_tree(g, terminals, root);
}

}  // namespace lazyroute
