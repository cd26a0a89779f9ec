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
#include <vector>

#include "lazyroute/bitvec.hpp"
#include "lazyroute/common.hpp"

namespace lazyroute {

/**
 * A wire permutation. sigma[i] is the wire that receives the content of
 * wire i, so as a linear map x -> y it sets y[sigma[i]] = x[i].
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::uint32_t n) : map_(n) {
    for (std::uint32_t i = 0; i < n; ++i) map_[i] = i;
  }
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t n) { return Permutation(n); }

  std::uint32_t size() const { return static_cast<std::uint32_t>(map_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return map_[i]; }
  const std::vector<std::uint32_t>& images() const { return map_; }

  Permutation inverse() const;

  /** Function composition: (a.compose(b))(x) = a(b(x)). */
  Permutation compose(const Permutation& other) const;

  bool is_identity() const;
  bool operator==(const Permutation& other) const = default;

 private:
  std::vector<std::uint32_t> map_;
};

/** Absorbs a SWAP on wires (i, j): returns the transposition composed
 *  after sigma, i.e. (i j) o sigma. */
Permutation perm_update_swap(const Permutation& sigma, std::uint32_t i, std::uint32_t j);

/** Mirrors an emitted SWAP on wires (u, v): returns sigma composed after
 *  the transposition, i.e. sigma o (u v). */
Permutation perm_mirror_swap(const Permutation& sigma, std::uint32_t u, std::uint32_t v);

/**
 * An invertible GF(2) matrix A together with its inverse, kept in lockstep.
 * The interpretation as a circuit operator is |x> -> |A x>.
 *
 * Wire updates:
 *  - absorbing an incoming CNOT(c, t) left-multiplies by the elementary
 *    matrix E[c,t]: row t of A ^= row c, column c of A^-1 ^= column t.
 *  - mirroring an emitted CNOT(c, t) right-multiplies by E[c,t]:
 *    row t of A^-1 ^= row c, column c of A ^= column t.
 */
class LinearTable {
 public:
  LinearTable() = default;
  explicit LinearTable(std::uint32_t n);

  static LinearTable identity(std::uint32_t n) { return LinearTable(n); }
  static LinearTable from_permutation(const Permutation& sigma);

  std::uint32_t size() const { return n_; }

  bool get(std::uint32_t r, std::uint32_t c) const { return rows_[r].get(c); }
  bool get_inv(std::uint32_t r, std::uint32_t c) const { return inv_rows_[r].get(c); }
  const BitVec& row(std::uint32_t r) const { return rows_[r]; }
  const BitVec& inv_row(std::uint32_t r) const { return inv_rows_[r]; }

  /** Incoming CNOT(control, target): A <- E[c,t] * A. */
  void absorb_cnot(std::uint32_t control, std::uint32_t target);

  /** Incoming SWAP: A <- S[a,b] * A. */
  void absorb_swap(std::uint32_t a, std::uint32_t b);

  /** Emitted CNOT(control, target): A <- A * E[c,t]. */
  void mirror_cnot(std::uint32_t control, std::uint32_t target);

  enum class Side { Matrix, Inverse };

  /** row dst ^= row src on the chosen matrix; the partner matrix receives
   *  the mirrored column update that preserves A * A^-1 = I. */
  void apply_row_op(Side side, std::uint32_t src, std::uint32_t dst);

  /** col dst ^= col src on the chosen matrix; mirrored likewise. */
  void apply_col_op(Side side, std::uint32_t src, std::uint32_t dst);

  bool is_identity() const;

  /** Row bitstrings of A, row-major, e.g. {"10", "11"}. */
  std::vector<std::string> row_strings() const;

  bool operator==(const LinearTable& other) const;

 private:
  void row_xor(std::vector<BitVec>& rows, std::uint32_t src, std::uint32_t dst) {
    rows[dst] ^= rows[src];
  }
  void col_xor(std::vector<BitVec>& rows, std::uint32_t src, std::uint32_t dst) {
    for (std::uint32_t r = 0; r < n_; ++r)
      if (rows[r].get(src)) rows[r].flip(dst);
  }

  std::uint32_t n_ = 0;
  std::vector<BitVec> rows_;
  std::vector<BitVec> inv_rows_;
};

}  // namespace lazyroute
