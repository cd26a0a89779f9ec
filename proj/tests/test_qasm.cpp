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

#include <numbers>
#include <string>

#include "doctest.h"
#include "lazyroute/qasm.hpp"

using namespace lazyroute;

namespace {

Circuit parse_body(const std::string& body) {
  return parse_qasm("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[4];\n" + body);
}

}  // namespace

TEST_CASE("parses the full supported gate alphabet") {
  Circuit c = parse_body(
      "h q[0]; x q[1]; y q[2]; z q[3]; s q[0]; sdg q[1]; t q[2]; tdg q[3];\n"
      "sx q[0]; sxdg q[1]; rz(pi/4) q[2]; cx q[0],q[1]; swap q[2],q[3];\n");
  CHECK(c.n_qubits == 4);
  REQUIRE(c.gates.size() == 13);
  CHECK(c.gates[0].kind == GateKind::H);
  CHECK(c.gates[5].kind == GateKind::Sdg);
  CHECK(c.gates[9].kind == GateKind::SqrtXdg);
  CHECK(c.gates[10].kind == GateKind::Rz);
  CHECK(c.gates[11] == Gate::cnot(0, 1));
  CHECK(c.gates[12] == Gate::swap(2, 3));
}

TEST_CASE("angles that are multiples of pi/4 parse as exact") {
  CHECK(parse_body("rz(pi/4) q[0];").gates[0].angle == Angle::exact(1));
  CHECK(parse_body("rz(pi/2) q[0];").gates[0].angle == Angle::exact(2));
  CHECK(parse_body("rz(3*pi/4) q[0];").gates[0].angle == Angle::exact(3));
  CHECK(parse_body("rz(pi) q[0];").gates[0].angle == Angle::exact(4));
  CHECK(parse_body("rz(-pi/4) q[0];").gates[0].angle == Angle::exact(-1));
  CHECK(parse_body("rz(2*pi) q[0];").gates[0].angle == Angle::exact(8));
  CHECK(parse_body("rz(7*pi/4) q[0];").gates[0].angle == Angle::exact(7));
}

TEST_CASE("other angle expressions parse as real values") {
  Angle third = parse_body("rz(pi/3) q[0];").gates[0].angle;
  CHECK_FALSE(third.is_exact());
  CHECK(third.radians() == doctest::Approx(std::numbers::pi / 3).epsilon(1e-15));

  Angle eighth = parse_body("rz(pi/8) q[0];").gates[0].angle;
  CHECK_FALSE(eighth.is_exact());
  CHECK(eighth.radians() == doctest::Approx(std::numbers::pi / 8).epsilon(1e-15));

  Angle plain = parse_body("rz(0.5) q[0];").gates[0].angle;
  CHECK_FALSE(plain.is_exact());
  CHECK(plain.radians() == doctest::Approx(0.5));

  // A decimal coefficient defeats exactness even when the value lands on
  // a quarter-turn grid point.
  Angle decimal = parse_body("rz(0.25*pi) q[0];").gates[0].angle;
  CHECK_FALSE(decimal.is_exact());
  CHECK(decimal.radians() == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));

  CHECK_FALSE(parse_body("rz(0) q[0];").gates[0].angle.is_exact());
  CHECK(parse_body("rz(0) q[0];").gates[0].angle.is_zero());
}

TEST_CASE("comments, whitespace, and multi-line statements are tolerated") {
  Circuit c = parse_qasm(
      "OPENQASM 2.0; // header comment\n"
      "qreg data[2];\n"
      "cx data[0], // spans lines\n"
      "   data[1];\n"
      "  h data[1] ;\n");
  CHECK(c.n_qubits == 2);
  REQUIRE(c.gates.size() == 2);
  CHECK(c.gates[0] == Gate::cnot(0, 1));
  CHECK(c.gates[1].kind == GateKind::H);
}

TEST_CASE("parse errors carry the offending line number") {
  CHECK_THROWS_WITH_AS(parse_qasm("qreg q[2];\nbadgate q[0];"),
                       doctest::Contains("line 2"), Error);
  CHECK_THROWS_WITH_AS(parse_qasm("qreg q[2];\ncx q[0],q[0];"),
                       doctest::Contains("distinct"), Error);
  CHECK_THROWS_WITH_AS(parse_qasm("qreg q[2];\nh q[5];"),
                       doctest::Contains("exceeds"), Error);
  CHECK_THROWS_WITH_AS(parse_qasm("qreg q[2];\nh p[0];"),
                       doctest::Contains("unknown register"), Error);
  CHECK_THROWS_AS(parse_qasm("h q[0];"), Error);              // gate before qreg
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\nh q[0]"), Error);   // missing ';'
  CHECK_THROWS_AS(parse_qasm("OPENQASM 2.0;"), Error);        // no qreg at all
  CHECK_THROWS_AS(parse_body("rz() q[0];"), Error);
  CHECK_THROWS_AS(parse_body("rz(pi/0) q[0];"), Error);
  CHECK_THROWS_AS(parse_body("h(0.5) q[0];"), Error);
  CHECK_THROWS_AS(parse_body("cx q[0];"), Error);
}

TEST_CASE("emitting and reparsing reproduces the circuit") {
  Circuit c = parse_body(
      "h q[0]; t q[1]; rz(3*pi/4) q[2]; rz(-pi/2) q[3]; rz(0.5) q[0];\n"
      "cx q[0],q[3]; swap q[1],q[2]; sxdg q[2];\n");
  Circuit again = parse_qasm(emit_qasm(c));
  CHECK(again == c);
}

TEST_CASE("emitted angle text uses reduced pi fractions") {
  Circuit c;
  c.n_qubits = 1;
  c.append(Gate::rz(0, Angle::exact(1)));
  c.append(Gate::rz(0, Angle::exact(-2)));
  c.append(Gate::rz(0, Angle::exact(4)));
  c.append(Gate::rz(0, Angle::exact(0)));
  std::string text = emit_qasm(c);
  CHECK(text.find("rz(pi/4) q[0];") != std::string::npos);
  CHECK(text.find("rz(-pi/2) q[0];") != std::string::npos);
  CHECK(text.find("rz(pi) q[0];") != std::string::npos);
  CHECK(text.find("rz(0) q[0];") != std::string::npos);
}

TEST_CASE("pauli rotations have no qasm form") {
  Circuit c;
  c.n_qubits = 2;
  c.append(Gate::pauli_rot(PauliString::parse("+XZ"), Angle::real(0.3)));
  CHECK_THROWS_AS(emit_qasm(c), Error);
}
