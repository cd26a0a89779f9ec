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

#include <random>
#include <vector>

#include "doctest.h"
#include "lazyroute/bitvec.hpp"
#include "lazyroute/f2.hpp"
#include "lazyroute/verify.hpp"

using namespace lazyroute;

TEST_CASE("bit vector basics") {
  BitVec v(5);
  CHECK(v.size() == 5);
  CHECK_FALSE(v.any());
  v.set(1, true);
  v.set(4, true);
  CHECK(v.get(1));
  CHECK_FALSE(v.get(2));
  CHECK(v.popcount() == 2);
  CHECK(v.support() == std::vector<Qubit>{1, 4});

  BitVec w(5);
  w.set(1, true);
  w.set(3, true);
  CHECK(v.dot(w) == true);  // overlap {1}
  v ^= w;
  CHECK(v.support() == std::vector<Qubit>{3, 4});
  v.flip(3);
  CHECK(v.support() == std::vector<Qubit>{4});
}

TEST_CASE("permutation composition and inverse") {
  // sigma sends content of wire i to sigma(i).
  Permutation sigma({1, 2, 0});
  CHECK(sigma(0) == 1);
  CHECK(sigma.inverse()(1) == 0);
  CHECK(sigma.compose(sigma.inverse()).is_identity());
  CHECK(sigma.inverse().compose(sigma).is_identity());

  Permutation tau({0, 2, 1});
  // compose is function composition: (sigma . tau)(x) = sigma(tau(x)).
  Permutation st = sigma.compose(tau);
  CHECK(st(0) == 1);
  CHECK(st(1) == 0);
  CHECK(st(2) == 2);

  CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
}

TEST_CASE("absorbing a swap prepends the transposition") {
  Permutation sigma({1, 2, 0});
  // Incoming SWAP(0, 1): new map is (0 1) after sigma.
  Permutation updated = perm_update_swap(sigma, 0, 1);
  CHECK(updated(0) == 0);  // sigma(0)=1, then (0 1) sends it to 0
  CHECK(updated(1) == 2);
  CHECK(updated(2) == 1);
}

TEST_CASE("mirroring a swap swaps two slots of the map") {
  Permutation sigma({1, 2, 0});
  // Emitted SWAP(0, 2): new map is sigma after (0 2).
  Permutation mirrored = perm_mirror_swap(sigma, 0, 2);
  CHECK(mirrored(0) == 0);  // (0 2) sends 0 to 2, sigma(2)=0
  CHECK(mirrored(1) == 2);
  CHECK(mirrored(2) == 1);
  // Mirroring twice restores the original.
  CHECK(perm_mirror_swap(mirrored, 0, 2) == sigma);
}

TEST_CASE("linear table starts as identity and tracks cnots") {
  LinearTable a(3);
  CHECK(a.is_identity());
  CHECK(a.row_strings() == std::vector<std::string>{"100", "010", "001"});

  // Incoming CNOT(0, 2): row 2 of A picks up row 0.
  a.absorb_cnot(0, 2);
  CHECK(a.row_strings() == std::vector<std::string>{"100", "010", "101"});
  CHECK(a.get(2, 0));
  // Inverse stays in lockstep: E[0,2] is self-inverse.
  CHECK(a.get_inv(2, 0));

  // Emitted CNOT(1, 2): A gains column update c1 ^= c2... as right factor.
  a.mirror_cnot(1, 2);
  // A * E[1,2]: column 1 of A ^= column 2.
  CHECK(a.row_strings() == std::vector<std::string>{"100", "010", "111"});

  a.absorb_swap(0, 1);
  CHECK(a.row_strings() == std::vector<std::string>{"010", "100", "111"});
}

TEST_CASE("linear table matches gf2 simulation of the absorbed word") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 4);
    Circuit c;
    c.n_qubits = n;
    LinearTable a(n);
    for (int i = 0; i < 25; ++i) {
      std::uint32_t u = static_cast<std::uint32_t>(rng() % n);
      std::uint32_t v = static_cast<std::uint32_t>(rng() % n);
      if (u == v) continue;
      if (rng() % 4 == 0) {
        c.append(Gate::swap(u, v));
        a.absorb_swap(u, v);
      } else {
        c.append(Gate::cnot(u, v));
        a.absorb_cnot(u, v);
      }
    }
    std::vector<BitVec> rows = f2_simulate(c);
    for (std::uint32_t r = 0; r < n; ++r) CHECK(a.row(r) == rows[r]);
    // A equals E_m ... E_1, so mirroring the word in forward order peels the
    // innermost factor each time and cancels A down to the identity.
    LinearTable b = a;
    for (const Gate& g : c.gates) {
      if (g.kind == GateKind::CNOT) {
        b.mirror_cnot(g.qubits[0], g.qubits[1]);
      } else {
        // An emitted SWAP is three mirrored CNOTs.
        b.mirror_cnot(g.qubits[0], g.qubits[1]);
        b.mirror_cnot(g.qubits[1], g.qubits[0]);
        b.mirror_cnot(g.qubits[0], g.qubits[1]);
      }
    }
    CHECK(b.is_identity());
  }
}

TEST_CASE("row and column operations keep the inverse in lockstep") {
  std::mt19937_64 rng(13);
  LinearTable a(4);
  a.absorb_cnot(0, 1);
  a.absorb_cnot(2, 3);
  a.apply_row_op(LinearTable::Side::Matrix, 1, 2);
  a.apply_col_op(LinearTable::Side::Inverse, 3, 0);
  a.apply_row_op(LinearTable::Side::Inverse, 0, 3);

  // Verify A * A^-1 = I by direct multiplication.
  for (std::uint32_t r = 0; r < 4; ++r)
    for (std::uint32_t c = 0; c < 4; ++c) {
      bool sum = false;
      for (std::uint32_t k = 0; k < 4; ++k) sum ^= a.get(r, k) && a.get_inv(k, c);
      CHECK(sum == (r == c));
    }
  (void)rng;
}

TEST_CASE("from_permutation places ones at the image rows") {
  // sigma: 0->2, 1->0, 2->1. |x> -> |Ax> with output wire sigma(i) reading
  // input wire i, so row sigma(i) of A is e_i.
  LinearTable a = LinearTable::from_permutation(Permutation({2, 0, 1}));
  CHECK(a.row_strings() == std::vector<std::string>{"010", "001", "100"});
}
