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

#include "lazyroute/pauli_string.hpp"

namespace lazyroute {

namespace {

// Phase exponent e such that letter(a) * letter(b) = i^e * letter(a^b),
// with letters encoded as I=0, X=1, Z=2, Y=3 and the convention Y = iXZ.
// Derived from X*Z = -iY and its cyclic relatives.
constexpr int kMulPhase[4][4] = {
    // I  X  Z  Y
    {0, 0, 0, 0},  // I * .
    {0, 0, 3, 1},  // X * .   (XZ = -iY, XY = iZ)
    {0, 1, 0, 3},  // Z * .   (ZX = iY,  ZY = -iX)
    {0, 3, 1, 0},  // Y * .   (YX = -iZ, YZ = iX)
};

}  // namespace

PauliString PauliString::parse(const std::string& text) {
  std::size_t pos = 0;
  bool neg = false;
  detail::require(!text.empty(), "empty Pauli string");
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    pos = 1;
  }
  detail::require(pos < text.size(), "Pauli string has no letters: " + text);
  PauliString p(text.size() - pos);
  for (Qubit q = 0; pos < text.size(); ++pos, ++q) {
    switch (text[pos]) {
      case 'I':
        break;
      case 'X':
        p.set_letter(q, PauliLetter::X);
        break;
      case 'Z':
        p.set_letter(q, PauliLetter::Z);
        break;
      case 'Y':
        p.set_letter(q, PauliLetter::Y);
        break;
      default:
        detail::fail("invalid Pauli letter '" + std::string(1, text[pos]) + "' in " + text);
    }
  }
  p.set_negative(neg);
  return p;
}

std::vector<Qubit> PauliString::support() const {
  std::vector<Qubit> out;
  for (Qubit q = 0; q < size(); ++q)
    if (letter(q) != PauliLetter::I) out.push_back(q);
  return out;
}

std::size_t PauliString::weight() const { return support().size(); }

void PauliString::multiply(const PauliString& other, int& phase_exponent) {
  detail::require(size() == other.size(), "Pauli string size mismatch in product");
  for (Qubit q = 0; q < size(); ++q) {
    auto a = static_cast<int>(letter(q));
    auto b = static_cast<int>(other.letter(q));
    if (a && b) phase_exponent = (phase_exponent + kMulPhase[a][b]) & 3;
  }
  x_ ^= other.x_bits();
  z_ ^= other.z_bits();
  negative_ ^= other.negative();
}

void PauliString::finish_phase(int phase_exponent) {
  phase_exponent &= 3;
  detail::require((phase_exponent & 1) == 0, "non-Hermitian Pauli product");
  if (phase_exponent == 2) negative_ = !negative_;
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(size() + 1);
  out.push_back(negative_ ? '-' : '+');
  for (Qubit q = 0; q < size(); ++q) {
    switch (letter(q)) {
      case PauliLetter::I:
        out.push_back('I');
        break;
      case PauliLetter::X:
        out.push_back('X');
        break;
      case PauliLetter::Z:
        out.push_back('Z');
        break;
      case PauliLetter::Y:
        out.push_back('Y');
        break;
    }
  }
  return out;
}

}  // namespace lazyroute
