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

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "doctest.h"
#include "lazyroute/search.hpp"

using namespace lazyroute;

namespace {

// Synthetic decision tree: each node id expands to scored children from a
// fixed table. Missing ids are natural leaves.
struct FixedTree {
  std::map<int, std::vector<std::pair<int, std::uint64_t>>> children;

  std::vector<SearchBranch<int>> operator()(int id) const {
    std::vector<SearchBranch<int>> out;
    auto it = children.find(id);
    if (it == children.end()) return out;
    for (auto [child, cost] : it->second) out.push_back({child, cost});
    return out;
  }

  std::vector<SearchBranch<int>> roots(int id) const { return (*this)(id); }
};

}  // namespace

TEST_CASE("three-way decision resolved one level down") {
  // Root choices a, b, c all cost 6 up front; their continuations cost
  // {6, 6}, {3}, and {6, 8}. One level of lookahead must pick b.
  FixedTree tree;
  tree.children[0] = {{1, 6}, {2, 6}, {3, 6}};
  tree.children[1] = {{4, 6}, {5, 6}};
  tree.children[2] = {{6, 3}};
  tree.children[3] = {{7, 6}, {8, 8}};

  SearchResult r = recursive_search(tree.roots(0), tree, 1);
  CHECK(r.index == 1);
  CHECK(r.score == 9);

  // Without lookahead the three-way tie goes to the first branch.
  SearchResult r0 = recursive_search(tree.roots(0), tree, 0);
  CHECK(r0.index == 0);
  CHECK(r0.score == 6);
}

TEST_CASE("lookahead can reverse the greedy choice") {
  FixedTree tree;
  tree.children[0] = {{1, 5}, {2, 6}};
  tree.children[1] = {{3, 10}};
  tree.children[2] = {{4, 1}};

  CHECK(recursive_search(tree.roots(0), tree, 0).index == 0);
  SearchResult deep = recursive_search(tree.roots(0), tree, 1);
  CHECK(deep.index == 1);
  CHECK(deep.score == 7);
}

TEST_CASE("deeper levels accumulate path costs") {
  FixedTree tree;
  tree.children[0] = {{1, 2}, {2, 2}};
  tree.children[1] = {{3, 2}};
  tree.children[2] = {{4, 1}};
  tree.children[3] = {{5, 0}};
  tree.children[4] = {{6, 9}};

  // Depth 1: branch 2 looks better (2+1 < 2+2).
  CHECK(recursive_search(tree.roots(0), tree, 1).index == 1);
  // Depth 2 sees branch 2's expensive tail: 2+2+0 < 2+1+9.
  SearchResult deep = recursive_search(tree.roots(0), tree, 2);
  CHECK(deep.index == 0);
  CHECK(deep.score == 4);
}

TEST_CASE("natural leaves stop expansion early") {
  FixedTree tree;
  tree.children[0] = {{1, 4}, {2, 5}};
  // Node 1 is a dead end; node 2 keeps going cheaply.
  tree.children[2] = {{3, 0}, {4, 0}};

  SearchResult r = recursive_search(tree.roots(0), tree, 3);
  CHECK(r.index == 0);
  CHECK(r.score == 4);
}

TEST_CASE("ties prefer the earliest branch at every depth") {
  FixedTree tree;
  tree.children[0] = {{1, 3}, {2, 3}, {3, 3}};
  tree.children[1] = {{4, 2}};
  tree.children[2] = {{5, 2}};
  tree.children[3] = {{6, 2}};
  for (std::uint32_t depth = 0; depth < 4; ++depth) {
    SearchResult r = recursive_search(tree.roots(0), tree, depth);
    CHECK(r.index == 0);
  }
}

TEST_CASE("a single branch wins without expansion") {
  FixedTree tree;
  tree.children[0] = {{1, 7}};
  tree.children[1] = {{2, 1}};
  SearchResult r = recursive_search(tree.roots(0), tree, 5);
  CHECK(r.index == 0);
  CHECK(r.score == 7);  // continuation cost not added for a lone branch
}

TEST_CASE("no branches is an error") {
  FixedTree tree;
  CHECK_THROWS_AS(recursive_search(tree.roots(99), tree, 1), Error);
}
