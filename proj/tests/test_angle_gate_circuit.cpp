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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "lazyroute/gate.hpp"

using namespace lazyroute;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("exact angles count quarter turns of pi/4") {
  Angle t = Angle::exact(1);
  CHECK(t.is_exact());
  CHECK(t.exact_k() == 1);
  CHECK(t.radians() == doctest::Approx(kPi / 4).epsilon(1e-15));
  CHECK_FALSE(t.is_clifford());
  CHECK_FALSE(t.is_zero());

  CHECK(Angle::exact(0).is_zero());
  CHECK(Angle::exact(0).is_clifford());
  CHECK(Angle::exact(2).is_clifford());
  CHECK(Angle::exact(-2).is_clifford());
  CHECK(Angle::exact(4).is_clifford());
  CHECK_FALSE(Angle::exact(3).is_clifford());
  CHECK_FALSE(Angle::exact(-1).is_clifford());
}

TEST_CASE("clifford quarter turns reduce modulo a full turn") {
  CHECK(Angle::exact(2).clifford_quarter_turns() == 1);
  CHECK(Angle::exact(4).clifford_quarter_turns() == 2);
  CHECK(Angle::exact(6).clifford_quarter_turns() == 3);
  CHECK(Angle::exact(8).clifford_quarter_turns() == 0);
  CHECK(Angle::exact(-2).clifford_quarter_turns() == 3);
  CHECK(Angle::exact(-4).clifford_quarter_turns() == 2);
  CHECK(Angle::real(kPi / 2).clifford_quarter_turns() == 1);
  CHECK(Angle::real(-kPi / 2).clifford_quarter_turns() == 3);
}

TEST_CASE("real angles detect clifford values only within tolerance") {
  CHECK(Angle::real(kPi / 2).is_clifford());
  CHECK(Angle::real(0.0).is_clifford());
  CHECK(Angle::real(0.0).is_zero());
  CHECK_FALSE(Angle::real(0.3).is_clifford());
  CHECK_FALSE(Angle::real(kPi / 2 + 1e-6).is_clifford());
  CHECK_FALSE(Angle::real(0.3).is_zero());
}

TEST_CASE("angle addition keeps exactness only between exact operands") {
  Angle a = Angle::exact(1) + Angle::exact(2);
  CHECK(a.is_exact());
  CHECK(a.exact_k() == 3);

  Angle b = Angle::exact(1) + Angle::real(0.5);
  CHECK_FALSE(b.is_exact());
  CHECK(b.radians() == doctest::Approx(kPi / 4 + 0.5).epsilon(1e-15));

  Angle c = -Angle::exact(3);
  CHECK(c.exact_k() == -3);
  CHECK((-Angle::real(0.25)).radians() == doctest::Approx(-0.25));
}

TEST_CASE("gate factories validate operands") {
  CHECK_THROWS_AS(Gate::cnot(2, 2), Error);
  CHECK_THROWS_AS(Gate::swap(0, 0), Error);
  CHECK_THROWS_AS(Gate::pauli_rot(PauliString::parse("+II"), Angle::exact(1)),
                  Error);

  Gate g = Gate::cnot(1, 3);
  CHECK(g.kind == GateKind::CNOT);
  CHECK(g.qubits == std::vector<Qubit>{1, 3});
  CHECK(g.num_qubits() == 2);
}

TEST_CASE("pauli rotation factory folds the axis sign into the angle") {
  Gate g = Gate::pauli_rot(PauliString::parse("-XZ"), Angle::exact(1));
  REQUIRE(g.axis.has_value());
  CHECK_FALSE(g.axis->negative());
  CHECK(g.axis->str() == "+XZ");
  CHECK(g.angle.exact_k() == -1);
  CHECK(g.qubits == std::vector<Qubit>{0, 1});
}

TEST_CASE("clifford and diagonal predicates") {
  CHECK(Gate{GateKind::H, {0}, Angle(), std::nullopt}.is_clifford());
  CHECK(Gate{GateKind::S, {0}, Angle(), std::nullopt}.is_clifford());
  CHECK_FALSE(Gate{GateKind::T, {0}, Angle(), std::nullopt}.is_clifford());
  CHECK(Gate::cnot(0, 1).is_clifford());
  CHECK(Gate::rz(0, Angle::exact(2)).is_clifford());
  CHECK_FALSE(Gate::rz(0, Angle::exact(1)).is_clifford());
  CHECK(Gate::pauli_rot(PauliString::parse("+XX"), Angle::exact(2)).is_clifford());

  CHECK(Gate::rz(0, Angle::exact(1)).is_diagonal());
  CHECK(Gate{GateKind::T, {0}, Angle(), std::nullopt}.is_diagonal());
  CHECK_FALSE(Gate{GateKind::H, {0}, Angle(), std::nullopt}.is_diagonal());
  CHECK(Gate::pauli_rot(PauliString::parse("+ZZ"), Angle::exact(1)).is_diagonal());
  CHECK_FALSE(Gate::pauli_rot(PauliString::parse("+XZ"), Angle::exact(1)).is_diagonal());
}

TEST_CASE("relabeling remaps operands and pauli axes alike") {
  Gate g = Gate::cnot(0, 2);
  Gate h = g.relabeled([](Qubit q) { return q + 1; });
  CHECK(h.qubits == std::vector<Qubit>{1, 3});

  Gate rot = Gate::pauli_rot(PauliString::parse("+XIZ"), Angle::exact(1));
  Gate moved = rot.relabeled([](Qubit q) { return (q + 1) % 3; });
  CHECK(moved.axis->str() == "+ZXI");
  CHECK(moved.qubits == std::vector<Qubit>{0, 1});
}

TEST_CASE("circuit append validates width") {
  Circuit c;
  c.n_qubits = 2;
  c.append(Gate::cnot(0, 1));
  CHECK_THROWS_AS(c.append(Gate::cnot(0, 2)), Error);
  CHECK(c.size() == 1);
}

TEST_CASE("padding widens pauli axes in place") {
  Circuit c;
  c.n_qubits = 2;
  c.append(Gate::pauli_rot(PauliString::parse("-XY"), Angle::real(0.3)));
  Circuit wide = c.padded(4);
  CHECK(wide.n_qubits == 4);
  REQUIRE(wide.gates.size() == 1);
  CHECK(wide.gates[0].axis->size() == 4);
  CHECK(wide.gates[0].axis->str() == "+XYII");
  CHECK(wide.gates[0].angle.radians() == doctest::Approx(-0.3));
  CHECK_THROWS_AS(c.padded(1), Error);
}

TEST_CASE("cnot counting treats a swap as three cnots") {
  Circuit c;
  c.n_qubits = 3;
  c.append(Gate{GateKind::H, {0}, Angle(), std::nullopt});
  c.append(Gate::cnot(0, 1));
  c.append(Gate::swap(1, 2));
  c.append(Gate::pauli_rot(PauliString::parse("+XXI"), Angle::real(0.4)));
  CHECK(count_cnots(c, CountMode::CnotEquivalent) == 4);
  CHECK(count_cnots(c) == 4);
  CHECK(count_cnots(c, CountMode::Raw2q) == 3);
}
