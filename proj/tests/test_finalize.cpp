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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "lazyroute/finalize.hpp"
#include "lazyroute/router.hpp"
#include "lazyroute/verify.hpp"

using namespace lazyroute;

namespace {

Gate one_q(GateKind kind, Qubit q) { return Gate{kind, {q}, Angle(), std::nullopt}; }

Circuit make_circuit(std::uint32_t n, std::vector<Gate> gates) {
  Circuit c;
  c.n_qubits = n;
  for (Gate& g : gates) c.append(std::move(g));
  return c;
}

// Qubit 0 is the most significant bit of a basis index.
BitVec index_to_bits(std::size_t m, std::uint32_t n) {
  BitVec w(n);
  for (std::uint32_t q = 0; q < n; ++q) w.set(q, (m >> (n - 1 - q)) & 1);
  return w;
}

std::size_t bits_to_index(const BitVec& w, std::uint32_t n) {
  std::size_t m = 0;
  for (std::uint32_t q = 0; q < n; ++q)
    if (w.get(q)) m |= std::size_t{1} << (n - 1 - q);
  return m;
}

Eigen::MatrixXcd dense_observable(const Observable& obs) {
  const std::size_t dim = std::size_t{1} << obs.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const ObservableTerm& term : obs.terms()) m += term.coefficient * dense_pauli(term.pauli);
  return m;
}

std::vector<double> basis_probabilities(const Circuit& c) {
  Eigen::VectorXcd psi = dense_state(c);
  std::vector<double> p(psi.size());
  for (Eigen::Index i = 0; i < psi.size(); ++i) p[i] = std::norm(psi(i));
  return p;
}

Tracker random_tracker(std::mt19937_64& rng, std::uint32_t n, int kind) {
  if (kind == 0) {
    std::vector<std::uint32_t> images(n);
    for (std::uint32_t i = 0; i < n; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return Tracker(Permutation(images));
  }
  if (kind == 1) {
    LinearTable a(n);
    for (int step = 0; step < 12; ++step) {
      Qubit c = rng() % n, t = rng() % n;
      if (c != t) a.absorb_cnot(c, t);
    }
    return Tracker(a);
  }
  CliffordTableau t(n);
  for (int step = 0; step < 16; ++step) {
    Qubit q = rng() % n;
    switch (rng() % 4) {
      case 0: t.left_mul(one_q(GateKind::H, q)); break;
      case 1: t.left_mul(one_q(GateKind::S, q)); break;
      case 2: t.left_mul(one_q(GateKind::X, q)); break;
      default: {
        Qubit r = rng() % n;
        if (q != r) t.left_mul(Gate::cnot(q, r));
        break;
      }
    }
  }
  return Tracker(t);
}

}  // namespace

TEST_CASE("observable terms fold signs and merge duplicates") {
  Observable obs(2);
  obs.add(0.5, PauliString::parse("+XZ"));
  obs.add(0.25, PauliString::parse("+XZ"));
  REQUIRE(obs.terms().size() == 1);
  CHECK(obs.terms()[0].coefficient == doctest::Approx(0.75));

  obs.add(-0.5, PauliString::parse("-XZ"));  // sign folds: adds +0.5
  CHECK(obs.terms()[0].coefficient == doctest::Approx(1.25));
  CHECK(!obs.terms()[0].pauli.negative());

  obs.add(1.0, PauliString::parse("+ZZ"));
  CHECK(obs.terms().size() == 2);

  obs.add(-1.25, PauliString::parse("+XZ"));  // cancels the first term
  REQUIRE(obs.terms().size() == 1);
  CHECK(obs.terms()[0].pauli == PauliString::parse("+ZZ"));
}

TEST_CASE("conjugating through the identity changes nothing") {
  Observable obs(3);
  obs.add(0.7, PauliString::parse("+XIZ"));
  obs.add(-0.2, PauliString::parse("+IYI"));
  Observable moved = conjugate_observable(obs, Tracker(Permutation::identity(3)));
  REQUIRE(moved.terms().size() == 2);
  CHECK(moved.terms()[0].pauli == PauliString::parse("+XIZ"));
  CHECK(moved.terms()[0].coefficient == doctest::Approx(0.7));
}

TEST_CASE("observable conjugation uses the inverse-side convention") {
  // h = S on one wire: h^-1 X h = S^dag X S = -Y, so the sign lands in
  // the coefficient and the stored string stays positive. The forward
  // direction S X S^dag = +Y would leave the coefficient alone, which is
  // what this case tells apart.
  CliffordTableau s(1);
  s.left_mul(one_q(GateKind::S, 0));
  Observable obs(1);
  obs.add(1.0, PauliString::parse("+X"));
  Observable moved = conjugate_observable(obs, Tracker(s));
  REQUIRE(moved.terms().size() == 1);
  CHECK(moved.terms()[0].pauli == PauliString::parse("+Y"));
  CHECK(moved.terms()[0].coefficient == doctest::Approx(-1.0));
}

TEST_CASE("conjugated observables match dense conjugation") {
  std::mt19937_64 rng(89);
  for (int kind = 0; kind < 3; ++kind) {
    for (int trial = 0; trial < 5; ++trial) {
      const std::uint32_t n = 3;
      Tracker h = random_tracker(rng, n, kind);
      Observable obs(n);
      obs.add(0.8, PauliString::parse("+XZI"));
      obs.add(-0.3, PauliString::parse("+IYZ"));
      obs.add(0.45, PauliString::parse("+ZIZ"));
      Observable moved = conjugate_observable(obs, h);

      Eigen::MatrixXcd u = dense_unitary(h);
      Eigen::MatrixXcd expected = u.adjoint() * dense_observable(obs) * u;
      CHECK(((dense_observable(moved) - expected).cwiseAbs().maxCoeff()) < 1e-9);
    }
  }
}

TEST_CASE("the identity tracker needs no measurement correction") {
  AffineFix fix = sampling_fix(Tracker(CliffordTableau(3)));
  CHECK(fix.diagonalizer.gates.empty());
  REQUIRE(fix.size() == 3);
  for (std::uint32_t i = 0; i < 3; ++i) {
    CHECK(fix.rows[i].popcount() == 1);
    CHECK(fix.rows[i].get(i));
    CHECK(!fix.offset.get(i));
  }
}

TEST_CASE("a two-wire clifford tracker reads off a frozen affine map") {
  Circuit c = make_circuit(2, {Gate::swap(0, 1), Gate::cnot(1, 0), one_q(GateKind::X, 0)});
  Tracker h(CliffordTableau::from_circuit(c));
  AffineFix fix = sampling_fix(h);

  // Both conjugated measurement operators are already diagonal.
  CHECK(fix.diagonalizer.gates.empty());
  REQUIRE(fix.size() == 2);
  CHECK(fix.rows[0].get(0));
  CHECK(fix.rows[0].get(1));
  CHECK(fix.rows[1].get(0));
  CHECK(!fix.rows[1].get(1));
  CHECK(fix.offset.get(0));
  CHECK(!fix.offset.get(1));

  // The induced map on raw samples, written as bit strings w0 w1.
  auto mapped = [&](bool w0, bool w1) {
    BitVec w(2);
    w.set(0, w0);
    w.set(1, w1);
    return apply_fix(fix, w);
  };
  CHECK(mapped(false, false) == index_to_bits(0b10, 2));
  CHECK(mapped(false, true) == index_to_bits(0b00, 2));
  CHECK(mapped(true, false) == index_to_bits(0b01, 2));
  CHECK(mapped(true, true) == index_to_bits(0b11, 2));
}

TEST_CASE("the affine fix is a bijection on bit strings") {
  std::mt19937_64 rng(97);
  for (int kind = 0; kind < 3; ++kind) {
    const std::uint32_t n = 5;
    AffineFix fix = sampling_fix(random_tracker(rng, n, kind));
    std::set<std::size_t> seen;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m)
      seen.insert(bits_to_index(apply_fix(fix, index_to_bits(m, n)), n));
    CHECK(seen.size() == std::size_t{1} << n);
  }
}

TEST_CASE("corrected samples reproduce the original distribution exactly") {
  std::mt19937_64 rng(101);
  CouplingGraph g = CouplingGraph::preset("lnn:4");
  Circuit in = make_circuit(
      4, {one_q(GateKind::H, 0), Gate::cnot(0, 2), one_q(GateKind::T, 2), Gate::cnot(1, 3),
          one_q(GateKind::H, 3), one_q(GateKind::S, 1), Gate::cnot(3, 0),
          one_q(GateKind::T, 0), one_q(GateKind::H, 2)});
  RouteOptions opts;
  opts.method = Method::Clifford;
  RoutedOutput out = route(in, g, opts);
  AffineFix fix = sampling_fix(out.final_operator);

  Circuit measured = out.circuit;
  measured.extend(fix.diagonalizer);
  std::vector<double> raw = basis_probabilities(measured);
  std::vector<double> reference = basis_probabilities(in);

  std::vector<double> corrected(reference.size(), 0.0);
  for (std::size_t m = 0; m < raw.size(); ++m)
    corrected[bits_to_index(apply_fix(fix, index_to_bits(m, 4)), 4)] += raw[m];

  for (std::size_t m = 0; m < reference.size(); ++m)
    CHECK(corrected[m] == doctest::Approx(reference[m]).epsilon(1e-9));

  // A finite seeded sample stays within total-variation 0.05.
  std::discrete_distribution<std::size_t> draw(raw.begin(), raw.end());
  std::vector<double> empirical(reference.size(), 0.0);
  const int shots = 100000;
  for (int s = 0; s < shots; ++s)
    empirical[bits_to_index(apply_fix(fix, index_to_bits(draw(rng), 4)), 4)] += 1.0 / shots;
  double tv = 0.0;
  for (std::size_t m = 0; m < reference.size(); ++m)
    tv += std::abs(empirical[m] - reference[m]);
  CHECK(tv / 2 <= 0.05);
}
