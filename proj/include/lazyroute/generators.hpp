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

#include "lazyroute/gate.hpp"

namespace lazyroute {

/**
 * Benchmark circuit for a MAX-k-LIN-2 style cost layer: a Hadamard layer,
 * then min(n^2, C(n,k)) distinct random weight-k parity phase blocks (CNOT
 * ladder, Rz, mirrored ladder), then one X rotation per qubit written as
 * H-Rz-H. All rotation angles are uniform in (0, pi/2), kept at least 1e-6
 * away from Clifford angles. Deterministic for a fixed seed.
 */
Circuit gen_qaoa_maxklin2(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/**
 * A sequence of `count` rotations about distinct random non-identity Pauli
 * axes, each lowered to the unconstrained ladder form: local basis changes
 * (H for X, sqrt-X for Y), a CNOT ladder along the support, Rz on the last
 * support wire, then the mirror. Deterministic for a fixed seed.
 */
Circuit gen_random_pauli_seq(std::uint32_t n, std::uint32_t count, std::uint64_t seed);

}  // namespace lazyroute
