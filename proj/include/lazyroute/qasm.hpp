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

#include <string>

#include "lazyroute/gate.hpp"

namespace lazyroute {

/**
 * Parses an OPENQASM 2.0 subset: a single qreg and the gates
 * h x y z s sdg t tdg sx sxdg rz cx swap. Comments (//) are stripped.
 * Rotation angles written as integer multiples of pi that land on a
 * multiple of pi/4 parse as exact angles; all other values parse as Real.
 * Errors carry 1-based line numbers.
 */
Circuit parse_qasm(const std::string& text);

/** Reads the file at `path` and parses it. */
Circuit parse_qasm_file(const std::string& path);

/** Serializes a circuit back to the supported subset. PauliRot gates have
 *  no QASM form and are rejected. Exact angles print as pi fractions and
 *  Real angles with enough digits to round-trip. */
std::string emit_qasm(const Circuit& c);

}  // namespace lazyroute
