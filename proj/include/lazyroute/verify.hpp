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

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "lazyroute/bitvec.hpp"
#include "lazyroute/coupling_graph.hpp"
#include "lazyroute/gate.hpp"
#include "lazyroute/tableau.hpp"
#include "lazyroute/tracker.hpp"

namespace lazyroute {

/** Default tolerance for unitary equivalence checks. */
inline constexpr double kEquivalenceTolerance = 1e-9;

/**
 * Widest register accepted by the dense simulators. The built-in default is
 * 10 qubits; the LAZYROUTE_DENSE_CAP environment variable overrides it up
 * to a hard limit of 12.
 */
std::uint32_t dense_qubit_cap();

/**
 * The 2^n x 2^n unitary of a gate word, built gate by gate from explicit
 * matrices. Basis index bit convention: qubit 0 is the most significant
 * bit, matching the leftmost letter of Pauli string text.
 */
Eigen::MatrixXcd dense_unitary(const Circuit& c);

/** Dense unitary of a Clifford tableau (fixed arbitrarily up to global
 *  phase), reconstructed from its generator images alone. */
Eigen::MatrixXcd dense_unitary(const CliffordTableau& t);

/** Dense matrix of a signed Pauli string. */
Eigen::MatrixXcd dense_pauli(const PauliString& p);

/** Dense unitary of a tracker. Permutation and linear trackers become
 *  exact 0/1 basis-permutation matrices; tableaux go through the
 *  stabilizer reconstruction. */
Eigen::MatrixXcd dense_unitary(const Tracker& h);

/** The state U|0...0> of a gate word. */
Eigen::VectorXcd dense_state(const Circuit& c);

/** True when a = phase * b entrywise for a single unit-modulus phase. */
bool equivalent_up_to_global_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                   double tol = kEquivalenceTolerance);

/** The routing contract: true iff ⟦h⟧ * U(c_out) = U(c_in) up to a single
 *  global phase. */
bool equivalent_up_to(const Tracker& h, const Circuit& c_in, const Circuit& c_out,
                      double tol = kEquivalenceTolerance);

/** Chained-routing contract with a carried-in operator: true iff
 *  ⟦h⟧ * U(c_out) = U(c_in) * ⟦h0⟧ up to a single global phase. */
bool equivalent_up_to(const Tracker& h, const Tracker& h0, const Circuit& c_in,
                      const Circuit& c_out, double tol = kEquivalenceTolerance);

/**
 * Simulates a CNOT/SWAP word as a GF(2) matrix, row r holding the output
 * parity of wire r in terms of the inputs. Rejects any other gate kind.
 */
std::vector<BitVec> f2_simulate(const Circuit& c);

/** Indices of gates touching two or more wires that do not sit on a
 *  coupling edge. Empty means the circuit is compliant. */
std::vector<std::size_t> compliance_violations(const Circuit& c, const CouplingGraph& g);

/**
 * True when every multi-wire gate touches exactly two wires joined by an
 * edge of the graph. On failure `why`, if given, names the first offender.
 */
bool is_compliant(const Circuit& c, const CouplingGraph& g, std::string* why = nullptr);

}  // namespace lazyroute
