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

#include "lazyroute/generators.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lazyroute/pauli_string.hpp"

namespace lazyroute {

namespace {

// mt19937_64 output is pinned by the standard, so everything derived from
// it here is reproducible across platforms as long as we avoid
// distribution classes (whose algorithms are implementation-defined).

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

/** Uniform in (0, pi/2), redrawn while within 1e-6 of a Clifford angle. */
Angle random_rotation_angle(std::mt19937_64& rng) {
  constexpr double kMargin = 1e-6;
  const double high = std::numbers::pi / 2.0;
  for (;;) {
    const double a = unit_double(rng) * high;
    if (a > kMargin && a < high - kMargin) return Angle::real(a);
  }
}

/** C(n, k), saturating at `cap`. */
std::uint64_t binomial_capped(std::uint32_t n, std::uint32_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result >= cap) return cap;
  }
  return result;
}

/** k distinct qubits below n, ascending, via a partial Fisher-Yates pass. */
std::vector<std::uint32_t> random_subset(std::mt19937_64& rng, std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> pool(n);
  for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t j =
        i + static_cast<std::uint32_t>(uniform_below(rng, n - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<std::uint32_t> subset(pool.begin(), pool.begin() + k);
  std::sort(subset.begin(), subset.end());
  return subset;
}

}  // namespace

Circuit gen_qaoa_maxklin2(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
  detail::require(n >= 2 && k >= 2 && k <= n, "weight must satisfy 2 <= k <= n");
  std::mt19937_64 rng(seed);

  const std::uint64_t cap = static_cast<std::uint64_t>(n) * n;
  const std::uint64_t target = binomial_capped(n, k, cap);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> parities;
  parities.reserve(target);
  while (parities.size() < target) {
    std::vector<std::uint32_t> subset = random_subset(rng, n, k);
    if (seen.insert(subset).second) parities.push_back(std::move(subset));
  }

  Circuit c(n);
  for (std::uint32_t q = 0; q < n; ++q) c.append(Gate::h(q));
  for (const std::vector<std::uint32_t>& p : parities) {
    for (std::size_t i = 1; i < p.size(); ++i) c.append(Gate::cnot(p[i - 1], p[i]));
    c.append(Gate::rz(p.back(), random_rotation_angle(rng)));
    for (std::size_t i = p.size(); i-- > 1;) c.append(Gate::cnot(p[i - 1], p[i]));
  }
  for (std::uint32_t q = 0; q < n; ++q) {
    c.append(Gate::h(q));
    c.append(Gate::rz(q, random_rotation_angle(rng)));
    c.append(Gate::h(q));
  }
  return c;
}

Circuit gen_random_pauli_seq(std::uint32_t n, std::uint32_t count, std::uint64_t seed) {
  detail::require(n >= 1, "register must be non-empty");
  detail::require(count >= 1, "need at least one rotation");
  if (2 * n < 64)
    detail::require(count <= (std::uint64_t{1} << (2 * n)) - 1,
                    "more rotations than distinct non-identity axes");
  std::mt19937_64 rng(seed);

  Circuit c(n);
  std::set<std::string> seen;
  std::uint32_t made = 0;
  while (made < count) {
    std::string letters(n, 'I');
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    bool identity = true;
    for (std::uint32_t q = 0; q < n; ++q) {
      letters[q] = kLetters[uniform_below(rng, 4)];
      identity = identity && letters[q] == 'I';
    }
    if (identity || !seen.insert(letters).second) continue;
    ++made;

    std::vector<std::uint32_t> supp;
    for (std::uint32_t q = 0; q < n; ++q)
      if (letters[q] != 'I') supp.push_back(q);
    for (const std::uint32_t q : supp) {
      if (letters[q] == 'X') c.append(Gate::h(q));
      if (letters[q] == 'Y') c.append(Gate::sqrt_x(q));
    }
    for (std::size_t i = 1; i < supp.size(); ++i) c.append(Gate::cnot(supp[i - 1], supp[i]));
    c.append(Gate::rz(supp.back(), random_rotation_angle(rng)));
    for (std::size_t i = supp.size(); i-- > 1;) c.append(Gate::cnot(supp[i - 1], supp[i]));
    for (std::size_t idx = supp.size(); idx-- > 0;) {
      const std::uint32_t q = supp[idx];
      if (letters[q] == 'X') c.append(Gate::h(q));
      if (letters[q] == 'Y') c.append(Gate::sqrt_x_dg(q));
    }
  }
  return c;
}

}  // namespace lazyroute
