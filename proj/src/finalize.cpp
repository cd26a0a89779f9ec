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

#include "lazyroute/finalize.hpp"

#include <cstddef>
#include <utility>

#include "lazyroute/tableau.hpp"

namespace lazyroute {

namespace {

bool gf2_invertible(std::vector<BitVec> rows) {
  const std::size_t n = rows.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r) {
      if (rows[r].get(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return false;
    std::swap(rows[col], rows[pivot]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != col && rows[r].get(col)) rows[r] ^= rows[col];
  }
  return true;
}

}  // namespace

void Observable::add(double coefficient, PauliString pauli) {
  detail::require(pauli.size() == n_, "term width differs from the observable");
  if (pauli.negative()) {
    coefficient = -coefficient;
    pauli.set_negative(false);
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].pauli.same_letters(pauli)) {
      terms_[i].coefficient += coefficient;
      if (terms_[i].coefficient == 0.0)
        terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(i));
      return;
    }
  }
  if (coefficient != 0.0) terms_.push_back({coefficient, std::move(pauli)});
}

Observable conjugate_observable(const Observable& obs, const Tracker& h) {
  const CliffordTableau t = tracker_tableau(h);
  detail::require(t.size() == obs.size(), "operator width differs from the observable");
  Observable out(obs.size());
  for (const ObservableTerm& term : obs.terms())
    out.add(term.coefficient, t.conjugate(term.pauli, CliffordTableau::Direction::Inverse));
  return out;
}

AffineFix sampling_fix(const Tracker& h) {
  const CliffordTableau t = tracker_tableau(h);
  const std::uint32_t n = t.size();

  // Measuring Z_i after the routed circuit plus ⟦h⟧ is the same as
  // measuring p[i] = h^-1 Z_i h before ⟦h⟧ is applied.
  std::vector<PauliString> p;
  p.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i)
    p.push_back(t.conjugate(PauliString::single(n, i, PauliLetter::Z),
                            CliffordTableau::Direction::Inverse));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      detail::require(p[i].commutes_with(p[j]), "conjugated measurements must commute");

  AffineFix fix;
  fix.diagonalizer = Circuit(n);
  const auto emit = [&](const Gate& g) {
    fix.diagonalizer.append(g);
    for (PauliString& q : p) conjugate_by_gate(q, g);
  };

  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<Qubit> xs;
    for (std::uint32_t a = 0; a < n; ++a) {
      const PauliLetter l = p[i].letter(a);
      if (l == PauliLetter::X || l == PauliLetter::Y) xs.push_back(a);
    }
    if (xs.empty()) continue;
    for (const Qubit a : xs)
      if (p[i].letter(a) == PauliLetter::Y) emit(Gate::s(a));
    const Qubit head = xs.front();
    for (std::size_t k = 1; k < xs.size(); ++k) emit(Gate::cnot(head, xs[k]));
    if (p[i].letter(head) == PauliLetter::Y) emit(Gate::s(head));
    // Earlier strings are diagonal and commute with p[i], whose only
    // anti-diagonal letter sits at `head`; none of them can hold a Z there,
    // so the H leaves them diagonal.
    emit(Gate::h(head));
    detail::require(p[i].is_diagonal(), "co-diagonalization failed");
  }

  fix.rows.reserve(n);
  fix.offset = BitVec(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    detail::require(p[i].is_diagonal(), "co-diagonalization left an off-diagonal string");
    BitVec row(n);
    for (std::uint32_t a = 0; a < n; ++a)
      if (p[i].letter(a) == PauliLetter::Z) row.set(a, true);
    fix.rows.push_back(std::move(row));
    fix.offset.set(i, p[i].negative());
  }
  detail::require(gf2_invertible(fix.rows), "readout map must be invertible");
  return fix;
}

BitVec apply_fix(const AffineFix& fix, const BitVec& w) {
  detail::require(w.size() == fix.rows.size(), "sample width differs from the fix");
  BitVec out(fix.rows.size());
  for (std::size_t i = 0; i < fix.rows.size(); ++i)
    out.set(i, fix.rows[i].dot(w) ^ fix.offset.get(i));
  return out;
}

}  // namespace lazyroute
