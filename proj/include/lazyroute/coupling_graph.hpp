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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lazyroute/common.hpp"

namespace lazyroute {

/**
 * An undirected, connected hardware coupling graph. All-pairs distances are
 * precomputed at construction. Path queries are deterministic: among equal
 * length paths, the lexicographically smallest vertex sequence is returned.
 */
class CouplingGraph {
 public:
  CouplingGraph(std::uint32_t n_vertices,
                const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  /** Named presets: melbourne, aspen, grid:RxC, lnn:N, all2all:N, or
   *  file:<path> pointing at an edge-list file. */
  static CouplingGraph preset(const std::string& name);

  /** Parses the edge-list format: a `qubits N` header, one `u v` pair per
   *  line, `#` comments. */
  static CouplingGraph parse_graph_file(const std::string& text);
  static CouplingGraph load_graph_file(const std::string& path);

  std::uint32_t n_vertices() const { return n_; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }

  bool has_edge(std::uint32_t u, std::uint32_t v) const { return adj_matrix_[u * n_ + v]; }

  /** Neighbors in ascending order. */
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }

  std::uint32_t dist(std::uint32_t a, std::uint32_t b) const { return dist_[a * n_ + b]; }

  /** Shortest path from a to b inclusive; lexicographically smallest among
   *  all shortest vertex sequences. */
  std::vector<std::uint32_t> shortest_path(std::uint32_t a, std::uint32_t b) const;

 private:
  std::uint32_t n_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<char> adj_matrix_;
  std::vector<std::uint32_t> dist_;
};

/**
 * A tree inside a coupling graph that spans a terminal set. Leaves are
 * always terminals. The root is one of the terminals; it can be chosen
 * freely when the tree is built by hand.
 */
struct SteinerTree {
  std::vector<std::uint32_t> vertices;  // ascending
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::uint32_t> terminals;  // ascending
  std::uint32_t root = 0;

  std::size_t num_vertices() const { return vertices.size(); }
  bool contains(std::uint32_t v) const;
  bool is_terminal(std::uint32_t v) const;
  std::vector<std::uint32_t> neighbors(std::uint32_t v) const;

  /** Checks connectivity, acyclicity, terminal coverage and that all
   *  leaves are terminals. Used by tests and debug assertions. */
  bool is_valid_for(const CouplingGraph& g) const;
};

/**
 * Nearest-terminal insertion heuristic. Starts from the root and repeatedly
 * attaches the terminal closest to the tree via a shortest path. Ties
 * (distance, terminal, attachment) break by lowest vertex index.
 * Approximation ratio 2(1-1/k) versus the optimal tree.
 */
SteinerTree steiner_tree(const CouplingGraph& g, const std::vector<std::uint32_t>& terminals,
                         std::uint32_t root);

/** Same, rooted at the lowest-index terminal. */
SteinerTree steiner_tree(const CouplingGraph& g, const std::vector<std::uint32_t>& terminals);

}  // namespace lazyroute
