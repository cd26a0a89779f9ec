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

#include "lazyroute/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <variant>

namespace lazyroute {

namespace {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

constexpr cd kI{0.0, 1.0};

std::size_t bit_mask(std::uint32_t n, Qubit q) {
  return std::size_t{1} << (n - 1 - q);
}

/** 2x2 matrix of a one-qubit gate. */
Eigen::Matrix2cd one_qubit_matrix(const Gate& g) {
  Eigen::Matrix2cd m;
  const double s = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H:
      m << s, s, s, -s;
      return m;
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::Y:
      m << 0, -kI, kI, 0;
      return m;
    case GateKind::Z:
      m << 1, 0, 0, -1;
      return m;
    case GateKind::S:
      m << 1, 0, 0, kI;
      return m;
    case GateKind::Sdg:
      m << 1, 0, 0, -kI;
      return m;
    case GateKind::T:
      m << 1, 0, 0, std::exp(kI * (std::numbers::pi / 4.0));
      return m;
    case GateKind::Tdg:
      m << 1, 0, 0, std::exp(-kI * (std::numbers::pi / 4.0));
      return m;
    case GateKind::SqrtX:
      m << s, -kI * s, -kI * s, s;
      return m;
    case GateKind::SqrtXdg:
      m << s, kI * s, kI * s, s;
      return m;
    case GateKind::Rz: {
      double t = g.angle.radians() / 2.0;
      m << std::exp(-kI * t), 0, 0, std::exp(kI * t);
      return m;
    }
    default:
      detail::fail("not a one-qubit gate: " + gate_kind_name(g.kind));
  }
}

/** Phase of P acting on basis state x: P|x> = phase * |x ^ xmask>. */
cd pauli_phase(const PauliString& p, std::size_t x) {
  int ys = 0;
  int zpar = 0;
  for (Qubit q = 0; q < p.size(); ++q) {
    PauliLetter l = p.letter(q);
    if (l == PauliLetter::Y) ++ys;
    if (l == PauliLetter::Z || l == PauliLetter::Y)
      zpar ^= static_cast<int>((x >> (p.size() - 1 - q)) & 1);
  }
  static const cd table[4] = {cd{1, 0}, kI, cd{-1, 0}, -kI};
  int e = (ys + 2 * zpar + (p.negative() ? 2 : 0)) & 3;
  return table[e];
}

std::size_t pauli_xmask(const PauliString& p) {
  std::size_t mask = 0;
  for (Qubit q = 0; q < p.size(); ++q)
    if (p.x_bits().get(q)) mask |= std::size_t{1} << (p.size() - 1 - q);
  return mask;
}

/** U <- G * U for a one-qubit gate G on wire q. */
void apply_one_qubit(Mat& u, const Eigen::Matrix2cd& m, std::uint32_t n, Qubit q) {
  const std::size_t mask = bit_mask(n, q);
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    Eigen::RowVectorXcd r0 = u.row(static_cast<Eigen::Index>(i));
    Eigen::RowVectorXcd r1 = u.row(static_cast<Eigen::Index>(i | mask));
    u.row(static_cast<Eigen::Index>(i)) = m(0, 0) * r0 + m(0, 1) * r1;
    u.row(static_cast<Eigen::Index>(i | mask)) = m(1, 0) * r0 + m(1, 1) * r1;
  }
}

void apply_gate(Mat& u, const Gate& g, std::uint32_t n) {
  const std::size_t dim = std::size_t{1} << n;
  switch (g.kind) {
    case GateKind::CNOT: {
      const std::size_t cm = bit_mask(n, g.qubits[0]);
      const std::size_t tm = bit_mask(n, g.qubits[1]);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cm) && !(i & tm))
          u.row(static_cast<Eigen::Index>(i))
              .swap(u.row(static_cast<Eigen::Index>(i | tm)));
      return;
    }
    case GateKind::Swap: {
      const std::size_t am = bit_mask(n, g.qubits[0]);
      const std::size_t bm = bit_mask(n, g.qubits[1]);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & am) && !(i & bm))
          u.row(static_cast<Eigen::Index>(i))
              .swap(u.row(static_cast<Eigen::Index>((i ^ am) | bm)));
      return;
    }
    case GateKind::PauliRot: {
      const PauliString& p = *g.axis;
      const cd c = std::cos(g.angle.radians() / 2.0);
      const cd s = -kI * std::sin(g.angle.radians() / 2.0);
      const std::size_t xmask = pauli_xmask(p);
      if (xmask == 0) {
        for (std::size_t i = 0; i < dim; ++i)
          u.row(static_cast<Eigen::Index>(i)) *= c + s * pauli_phase(p, i);
        return;
      }
      for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t j = i ^ xmask;
        if (j < i) continue;
        Eigen::RowVectorXcd ri = u.row(static_cast<Eigen::Index>(i));
        Eigen::RowVectorXcd rj = u.row(static_cast<Eigen::Index>(j));
        // Row y of the result mixes in row y^xmask weighted by the phase
        // P picks up on the source basis state.
        u.row(static_cast<Eigen::Index>(i)) = c * ri + s * pauli_phase(p, j) * rj;
        u.row(static_cast<Eigen::Index>(j)) = c * rj + s * pauli_phase(p, i) * ri;
      }
      return;
    }
    default:
      apply_one_qubit(u, one_qubit_matrix(g), n, g.qubits[0]);
      return;
  }
}

void require_dense_ok(std::uint32_t n) {
  detail::require(n >= 1, "dense simulation needs at least one qubit");
  detail::require(n <= dense_qubit_cap(),
                  "register too wide for dense simulation (" + std::to_string(n) +
                      " qubits, cap " + std::to_string(dense_qubit_cap()) + ")");
}

/** v <- P v for a signed Pauli string. */
void apply_pauli_vec(const PauliString& p, Eigen::VectorXcd& v) {
  const std::size_t xmask = pauli_xmask(p);
  const std::size_t dim = static_cast<std::size_t>(v.size());
  Eigen::VectorXcd out(v.size());
  for (std::size_t x = 0; x < dim; ++x)
    out(static_cast<Eigen::Index>(x ^ xmask)) =
        pauli_phase(p, x) * v(static_cast<Eigen::Index>(x));
  v = std::move(out);
}

}  // namespace

std::uint32_t dense_qubit_cap() {
  static const std::uint32_t cap = [] {
    std::uint32_t v = 10;
    if (const char* env = std::getenv("LAZYROUTE_DENSE_CAP")) {
      char* end = nullptr;
      long parsed = std::strtol(env, &end, 10);
      if (end && *end == '\0' && parsed >= 1) v = static_cast<std::uint32_t>(parsed);
    }
    return v > 12 ? 12 : v;
  }();
  return cap;
}

Eigen::MatrixXcd dense_unitary(const Circuit& c) {
  require_dense_ok(c.n_qubits);
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  Mat u = Mat::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const Gate& g : c.gates) apply_gate(u, g, c.n_qubits);
  return u;
}

Eigen::MatrixXcd dense_unitary(const CliffordTableau& t) {
  const std::uint32_t n = t.size();
  require_dense_ok(n);
  const std::size_t dim = std::size_t{1} << n;

  // |psi0> = T|0...0> is the unique (up to phase) common +1 eigenvector of
  // the images T Z_q T^dag. Project a fixed pseudorandom vector with
  // (I + P)/2 for each image, then build column x as T X^x T^dag |psi0>.
  std::mt19937_64 rng(0x10a2d5eedULL);
  Eigen::VectorXcd psi(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    double re = static_cast<double>(rng() >> 11) / 9007199254740992.0;
    double im = static_cast<double>(rng() >> 11) / 9007199254740992.0;
    psi(static_cast<Eigen::Index>(i)) = cd{2.0 * re - 1.0, 2.0 * im - 1.0};
  }
  for (Qubit q = 0; q < n; ++q) {
    Eigen::VectorXcd pv = psi;
    apply_pauli_vec(t.image_z(q), pv);
    psi = 0.5 * (psi + pv);
  }
  double norm = psi.norm();
  detail::require(norm > 1e-9, "stabilizer projection annihilated the seed vector");
  psi /= norm;

  Mat u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    Eigen::VectorXcd col = psi;
    for (Qubit q = 0; q < n; ++q)
      if (x & (std::size_t{1} << (n - 1 - q))) apply_pauli_vec(t.image_x(q), col);
    u.col(static_cast<Eigen::Index>(x)) = col;
  }
  return u;
}

Eigen::MatrixXcd dense_pauli(const PauliString& p) {
  require_dense_ok(static_cast<std::uint32_t>(p.size()));
  const std::size_t dim = std::size_t{1} << p.size();
  Mat m = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const std::size_t xmask = pauli_xmask(p);
  for (std::size_t x = 0; x < dim; ++x)
    m(static_cast<Eigen::Index>(x ^ xmask), static_cast<Eigen::Index>(x)) =
        pauli_phase(p, x);
  return m;
}

Eigen::VectorXcd dense_state(const Circuit& c) {
  require_dense_ok(c.n_qubits);
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  Mat u = Mat::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const Gate& g : c.gates) apply_gate(u, g, c.n_qubits);
  return u.col(0);
}

bool equivalent_up_to_global_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                                   double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < tol) return a.cwiseAbs().maxCoeff() < tol;
  const cd phase = a(r, c) / b(r, c);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

std::vector<BitVec> f2_simulate(const Circuit& c) {
  std::vector<BitVec> rows(c.n_qubits);
  for (Qubit q = 0; q < c.n_qubits; ++q) {
    rows[q] = BitVec(c.n_qubits);
    rows[q].set(q, true);
  }
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::CNOT:
        rows[g.qubits[1]] ^= rows[g.qubits[0]];
        break;
      case GateKind::Swap:
        std::swap(rows[g.qubits[0]], rows[g.qubits[1]]);
        break;
      default:
        detail::fail("f2_simulate given a non-linear gate: " + gate_kind_name(g.kind));
    }
  }
  return rows;
}

std::vector<std::size_t> compliance_violations(const Circuit& c, const CouplingGraph& g) {
  detail::require(c.n_qubits <= g.n_vertices(), "circuit wider than the coupling graph");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& gate = c.gates[i];
    if (gate.num_qubits() < 2) continue;
    if (gate.num_qubits() > 2 || !g.has_edge(gate.qubits[0], gate.qubits[1])) out.push_back(i);
  }
  return out;
}

bool is_compliant(const Circuit& c, const CouplingGraph& g, std::string* why) {
  std::vector<std::size_t> bad = compliance_violations(c, g);
  if (bad.empty()) return true;
  if (why) {
    const Gate& gate = c.gates[bad.front()];
    if (gate.num_qubits() > 2)
      *why = "gate " + std::to_string(bad.front()) + " (" + gate.str() + ") touches " +
             std::to_string(gate.num_qubits()) + " wires";
    else
      *why = "gate " + std::to_string(bad.front()) + " (" + gate.str() +
             ") is not on a coupling edge";
  }
  return false;
}

namespace {

Eigen::MatrixXcd dense_basis_map(std::uint32_t n, const std::function<std::size_t(std::size_t)>& image) {
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x)
    u(static_cast<Eigen::Index>(image(x)), static_cast<Eigen::Index>(x)) = 1.0;
  return u;
}

}  // namespace

Eigen::MatrixXcd dense_unitary(const Tracker& h) {
  const std::uint32_t n = tracker_size(h);
  detail::require(n <= dense_qubit_cap(), "tracker wider than the dense simulation cap");
  if (const auto* sigma = std::get_if<Permutation>(&h)) {
    return dense_basis_map(n, [&](std::size_t x) {
      std::size_t y = 0;
      for (Qubit q = 0; q < n; ++q)
        if (x & bit_mask(n, q)) y |= bit_mask(n, (*sigma)(q));
      return y;
    });
  }
  if (const auto* a = std::get_if<LinearTable>(&h)) {
    return dense_basis_map(n, [&](std::size_t x) {
      std::size_t y = 0;
      for (Qubit r = 0; r < n; ++r) {
        bool bit = false;
        for (Qubit q = 0; q < n; ++q)
          if (a->get(r, q) && (x & bit_mask(n, q))) bit = !bit;
        if (bit) y |= bit_mask(n, r);
      }
      return y;
    });
  }
  return dense_unitary(std::get<CliffordTableau>(h));
}

bool equivalent_up_to(const Tracker& h, const Circuit& c_in, const Circuit& c_out, double tol) {
  detail::require(c_in.n_qubits == c_out.n_qubits && c_out.n_qubits == tracker_size(h),
                  "equivalence check needs matching widths");
  const Eigen::MatrixXcd lhs = dense_unitary(c_in);
  const Eigen::MatrixXcd rhs = dense_unitary(h) * dense_unitary(c_out);
  return equivalent_up_to_global_phase(rhs, lhs, tol);
}

bool equivalent_up_to(const Tracker& h, const Tracker& h0, const Circuit& c_in,
                      const Circuit& c_out, double tol) {
  detail::require(c_in.n_qubits == c_out.n_qubits && c_out.n_qubits == tracker_size(h) &&
                      tracker_size(h0) == tracker_size(h),
                  "equivalence check needs matching widths");
  const Eigen::MatrixXcd lhs = dense_unitary(c_in) * dense_unitary(h0);
  const Eigen::MatrixXcd rhs = dense_unitary(h) * dense_unitary(c_out);
  return equivalent_up_to_global_phase(rhs, lhs, tol);
}

}  // namespace lazyroute
