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

#include "lazyroute/f2.hpp"

#include <algorithm>

namespace lazyroute {

Permutation::Permutation(std::vector<std::uint32_t> images) : map_(std::move(images)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::uint32_t v : map_) {
    detail::require(v < map_.size() && !seen[v], "invalid permutation image list");
    seen[v] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(map_.size());
  for (std::uint32_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  detail::require(size() == other.size(), "permutation size mismatch");
  std::vector<std::uint32_t> out(map_.size());
  for (std::uint32_t i = 0; i < map_.size(); ++i) out[i] = map_[other.map_[i]];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

Permutation perm_update_swap(const Permutation& sigma, std::uint32_t i, std::uint32_t j) {
  detail::require(i < sigma.size() && j < sigma.size() && i != j,
                  "swap wires out of range");
  std::vector<std::uint32_t> out = sigma.images();
  for (auto& v : out) {
    if (v == i)
      v = j;
    else if (v == j)
      v = i;
  }
  return Permutation(std::move(out));
}

Permutation perm_mirror_swap(const Permutation& sigma, std::uint32_t u, std::uint32_t v) {
  detail::require(u < sigma.size() && v < sigma.size() && u != v,
                  "swap wires out of range");
  std::vector<std::uint32_t> out = sigma.images();
  std::swap(out[u], out[v]);
  return Permutation(std::move(out));
}

LinearTable::LinearTable(std::uint32_t n) : n_(n), rows_(n), inv_rows_(n) {
  for (std::uint32_t i = 0; i < n; ++i) {
    rows_[i] = BitVec(n);
    inv_rows_[i] = BitVec(n);
    rows_[i].set(i, true);
    inv_rows_[i].set(i, true);
  }
}

LinearTable LinearTable::from_permutation(const Permutation& sigma) {
  LinearTable t(sigma.size());
  for (std::uint32_t i = 0; i < sigma.size(); ++i) {
    t.rows_[sigma(i)] = BitVec(sigma.size());
    t.rows_[sigma(i)].set(i, true);
    t.inv_rows_[i] = BitVec(sigma.size());
    t.inv_rows_[i].set(sigma(i), true);
  }
  return t;
}

void LinearTable::absorb_cnot(std::uint32_t control, std::uint32_t target) {
  detail::require(control < n_ && target < n_ && control != target,
                  "cnot wires out of range");
  row_xor(rows_, control, target);
  col_xor(inv_rows_, target, control);
}

void LinearTable::absorb_swap(std::uint32_t a, std::uint32_t b) {
  detail::require(a < n_ && b < n_ && a != b, "swap wires out of range");
  std::swap(rows_[a], rows_[b]);
  for (std::uint32_t r = 0; r < n_; ++r) {
    bool va = inv_rows_[r].get(a);
    bool vb = inv_rows_[r].get(b);
    inv_rows_[r].set(a, vb);
    inv_rows_[r].set(b, va);
  }
}

void LinearTable::mirror_cnot(std::uint32_t control, std::uint32_t target) {
  detail::require(control < n_ && target < n_ && control != target,
                  "cnot wires out of range");
  col_xor(rows_, target, control);
  row_xor(inv_rows_, control, target);
}

void LinearTable::apply_row_op(Side side, std::uint32_t src, std::uint32_t dst) {
  detail::require(src < n_ && dst < n_ && src != dst, "row op out of range");
  if (side == Side::Matrix) {
    row_xor(rows_, src, dst);
    col_xor(inv_rows_, dst, src);
  } else {
    row_xor(inv_rows_, src, dst);
    col_xor(rows_, dst, src);
  }
}

void LinearTable::apply_col_op(Side side, std::uint32_t src, std::uint32_t dst) {
  detail::require(src < n_ && dst < n_ && src != dst, "col op out of range");
  if (side == Side::Matrix) {
    col_xor(rows_, src, dst);
    row_xor(inv_rows_, dst, src);
  } else {
    col_xor(inv_rows_, src, dst);
    row_xor(rows_, dst, src);
  }
}

bool LinearTable::is_identity() const {
  for (std::uint32_t r = 0; r < n_; ++r)
    for (std::uint32_t c = 0; c < n_; ++c)
      if (rows_[r].get(c) != (r == c)) return false;
  return true;
}

std::vector<std::string> LinearTable::row_strings() const {
  std::vector<std::string> out;
  out.reserve(n_);
  for (std::uint32_t r = 0; r < n_; ++r) {
    std::string s(n_, '0');
    for (std::uint32_t c = 0; c < n_; ++c)
      if (rows_[r].get(c)) s[c] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

bool LinearTable::operator==(const LinearTable& other) const {
  return n_ == other.n_ && rows_ == other.rows_ && inv_rows_ == other.inv_rows_;
}

}  // namespace lazyroute
