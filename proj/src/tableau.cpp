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

#include "lazyroute/tableau.hpp"

#include <utility>

namespace lazyroute {

namespace {

/** Image of p under the Clifford whose generator images are img_x/img_z:
 *  each letter of p is replaced by its image and the products are folded
 *  with Y = i*X*Z, so signs come out exactly. */
PauliString map_string(const std::vector<PauliString>& img_x,
                       const std::vector<PauliString>& img_z, const PauliString& p) {
  PauliString out(img_x.empty() ? p.size() : img_x[0].size());
  out.set_negative(p.negative());
  int phase = 0;
  for (Qubit q = 0; q < p.size(); ++q) {
    switch (p.letter(q)) {
      case PauliLetter::I:
        break;
      case PauliLetter::X:
        out.multiply(img_x[q], phase);
        break;
      case PauliLetter::Z:
        out.multiply(img_z[q], phase);
        break;
      case PauliLetter::Y:
        phase = (phase + 1) & 3;
        out.multiply(img_x[q], phase);
        out.multiply(img_z[q], phase);
        break;
    }
  }
  out.finish_phase(phase);
  return out;
}

/** p <- R p R^dag for R = exp(-i * angle/2 * axis), angle a multiple of
 *  pi/2. Anticommuting strings pick up -iPQ / -Q / +iPQ at 1/2/3 quarter
 *  turns; commuting strings are fixed. */
void conjugate_by_rotation(PauliString& p, const PauliString& axis, int quarter_turns) {
  if (quarter_turns == 0 || p.commutes_with(axis)) return;
  if (quarter_turns == 2) {
    p.flip_sign();
    return;
  }
  int phase = quarter_turns == 1 ? 3 : 1;
  PauliString out = axis;
  out.multiply(p, phase);
  out.finish_phase(phase);
  p = std::move(out);
}

}  // namespace

void conjugate_by_gate(PauliString& p, const Gate& g, bool adjoint) {
  detail::require(g.is_clifford(), "cannot conjugate by a non-Clifford gate");
  const auto xbit = [&p](Qubit q) { return p.x_bits().get(q); };
  const auto zbit = [&p](Qubit q) { return p.z_bits().get(q); };
  switch (g.kind) {
    case GateKind::H: {
      Qubit q = g.qubits[0];
      bool x = xbit(q), z = zbit(q);
      if (x && z) p.flip_sign();
      p.x_bits().set(q, z);
      p.z_bits().set(q, x);
      return;
    }
    case GateKind::X: {
      if (zbit(g.qubits[0])) p.flip_sign();
      return;
    }
    case GateKind::Y: {
      Qubit q = g.qubits[0];
      if (xbit(q) ^ zbit(q)) p.flip_sign();
      return;
    }
    case GateKind::Z: {
      if (xbit(g.qubits[0])) p.flip_sign();
      return;
    }
    case GateKind::S:
    case GateKind::Sdg: {
      Qubit q = g.qubits[0];
      bool x = xbit(q), z = zbit(q);
      bool dagger = (g.kind == GateKind::Sdg) != adjoint;
      if (x && (dagger ? !z : z)) p.flip_sign();
      p.z_bits().set(q, z ^ x);
      return;
    }
    case GateKind::SqrtX:
    case GateKind::SqrtXdg: {
      Qubit q = g.qubits[0];
      bool x = xbit(q), z = zbit(q);
      bool dagger = (g.kind == GateKind::SqrtXdg) != adjoint;
      if (z && (dagger ? x : !x)) p.flip_sign();
      p.x_bits().set(q, x ^ z);
      return;
    }
    case GateKind::CNOT: {
      Qubit c = g.qubits[0], t = g.qubits[1];
      bool xc = xbit(c), zc = zbit(c), xt = xbit(t), zt = zbit(t);
      if (xc && zt && xt == zc) p.flip_sign();
      p.x_bits().set(t, xt ^ xc);
      p.z_bits().set(c, zc ^ zt);
      return;
    }
    case GateKind::Swap: {
      Qubit a = g.qubits[0], b = g.qubits[1];
      bool xa = xbit(a), za = zbit(a), xb = xbit(b), zb = zbit(b);
      p.x_bits().set(a, xb);
      p.z_bits().set(a, zb);
      p.x_bits().set(b, xa);
      p.z_bits().set(b, za);
      return;
    }
    case GateKind::Rz: {
      int k = g.angle.clifford_quarter_turns();
      if (adjoint) k = (4 - k) & 3;
      PauliString axis = PauliString::single(p.size(), g.qubits[0], PauliLetter::Z);
      conjugate_by_rotation(p, axis, k);
      return;
    }
    case GateKind::PauliRot: {
      detail::require(g.axis->size() == p.size(),
                      "rotation axis width differs from string width");
      int k = g.angle.clifford_quarter_turns();
      if (adjoint) k = (4 - k) & 3;
      conjugate_by_rotation(p, *g.axis, k);
      return;
    }
    case GateKind::T:
    case GateKind::Tdg:
      break;
  }
  detail::fail("cannot conjugate by gate " + gate_kind_name(g.kind));
}

std::vector<Gate> diagonalize_local(const PauliString& p) {
  std::vector<Gate> out;
  for (Qubit q : p.support()) {
    switch (p.letter(q)) {
      case PauliLetter::X:
        out.push_back(Gate::h(q));
        break;
      case PauliLetter::Y:
        out.push_back(Gate::sqrt_x(q));
        break;
      default:
        break;
    }
  }
  return out;
}

CliffordTableau::CliffordTableau(std::uint32_t n) : n_(n) {
  fwd_x_.reserve(n);
  fwd_z_.reserve(n);
  inv_x_.reserve(n);
  inv_z_.reserve(n);
  for (Qubit q = 0; q < n; ++q) {
    fwd_x_.push_back(PauliString::single(n, q, PauliLetter::X));
    fwd_z_.push_back(PauliString::single(n, q, PauliLetter::Z));
    inv_x_.push_back(PauliString::single(n, q, PauliLetter::X));
    inv_z_.push_back(PauliString::single(n, q, PauliLetter::Z));
  }
}

CliffordTableau CliffordTableau::from_circuit(const Circuit& c) {
  CliffordTableau t(c.n_qubits);
  for (const Gate& g : c.gates) t.left_mul(g);
  return t;
}

CliffordTableau CliffordTableau::from_linear(const LinearTable& a) {
  // |x> -> |Ax> maps X_q to X on column q of A (flipping input bit q flips
  // the output bits fed by it) and Z_q to Z on row q of A^-1 (the output
  // parity that reproduces input bit q). All signs are +1.
  std::uint32_t n = a.size();
  CliffordTableau t(n);
  for (Qubit q = 0; q < n; ++q) {
    PauliString fx(n), fz(n), ix(n), iz(n);
    for (Qubit r = 0; r < n; ++r) {
      if (a.get(r, q)) fx.set_letter(r, PauliLetter::X);
      if (a.get_inv(q, r)) fz.set_letter(r, PauliLetter::Z);
      if (a.get_inv(r, q)) ix.set_letter(r, PauliLetter::X);
      if (a.get(q, r)) iz.set_letter(r, PauliLetter::Z);
    }
    t.fwd_x_[q] = std::move(fx);
    t.fwd_z_[q] = std::move(fz);
    t.inv_x_[q] = std::move(ix);
    t.inv_z_[q] = std::move(iz);
  }
  return t;
}

CliffordTableau CliffordTableau::from_permutation(const Permutation& sigma) {
  return from_linear(LinearTable::from_permutation(sigma));
}

void CliffordTableau::mul(const Gate& g, bool right, bool adjoint) {
  detail::require(g.is_clifford(), "cannot multiply a non-Clifford gate into a tableau");
  for (Qubit q : g.qubits) detail::require(q < n_, "gate operand out of tableau range");

  // One image family is conjugated by the gate row by row; the other is
  // rebuilt only on the gate's wires by pushing the gate's own generator
  // images through the old rows.
  auto& direct_x = right ? inv_x_ : fwd_x_;
  auto& direct_z = right ? inv_z_ : fwd_z_;
  auto& mapped_x = right ? fwd_x_ : inv_x_;
  auto& mapped_z = right ? fwd_z_ : inv_z_;
  bool direct_adjoint = right ? !adjoint : adjoint;

  for (auto& s : direct_x) conjugate_by_gate(s, g, direct_adjoint);
  for (auto& s : direct_z) conjugate_by_gate(s, g, direct_adjoint);

  std::vector<PauliString> old_x = mapped_x;
  std::vector<PauliString> old_z = mapped_z;
  for (Qubit q : g.qubits) {
    PauliString qx = PauliString::single(n_, q, PauliLetter::X);
    PauliString qz = PauliString::single(n_, q, PauliLetter::Z);
    conjugate_by_gate(qx, g, !direct_adjoint);
    conjugate_by_gate(qz, g, !direct_adjoint);
    mapped_x[q] = map_string(old_x, old_z, qx);
    mapped_z[q] = map_string(old_x, old_z, qz);
  }
}

CliffordTableau CliffordTableau::inverted() const {
  CliffordTableau t = *this;
  std::swap(t.fwd_x_, t.inv_x_);
  std::swap(t.fwd_z_, t.inv_z_);
  return t;
}

CliffordTableau CliffordTableau::compose(const CliffordTableau& a,
                                         const CliffordTableau& b) {
  detail::require(a.n_ == b.n_, "tableau size mismatch in product");
  CliffordTableau t(a.n_);
  for (Qubit q = 0; q < a.n_; ++q) {
    t.fwd_x_[q] = map_string(a.fwd_x_, a.fwd_z_, b.fwd_x_[q]);
    t.fwd_z_[q] = map_string(a.fwd_x_, a.fwd_z_, b.fwd_z_[q]);
    t.inv_x_[q] = map_string(b.inv_x_, b.inv_z_, a.inv_x_[q]);
    t.inv_z_[q] = map_string(b.inv_x_, b.inv_z_, a.inv_z_[q]);
  }
  return t;
}

PauliString CliffordTableau::conjugate(const PauliString& p, Direction dir) const {
  detail::require(p.size() == n_, "Pauli string width differs from tableau width");
  if (dir == Direction::Forward) return map_string(fwd_x_, fwd_z_, p);
  return map_string(inv_x_, inv_z_, p);
}

bool CliffordTableau::is_identity() const {
  for (Qubit q = 0; q < n_; ++q) {
    if (fwd_x_[q] != PauliString::single(n_, q, PauliLetter::X)) return false;
    if (fwd_z_[q] != PauliString::single(n_, q, PauliLetter::Z)) return false;
  }
  return true;
}

}  // namespace lazyroute
