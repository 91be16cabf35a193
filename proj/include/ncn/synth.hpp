// Copyright 2026 The ncnsynth Authors
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

/**
 * @file
 * Exact synthesis of a 2^k x 2^k unitary into CNOT and single-qubit gates.
 *
 * The unitary is reduced column by column with two-level (Givens) factors.
 * Rows are visited in Gray-code order and every entry is zeroed against its
 * Gray-code predecessor, so each factor acts on two basis states that differ
 * in a single bit and becomes one fully-controlled single-qubit gate.
 * Multi-controlled gates are expanded with the V / V^dagger / V ladder; the
 * multi-controlled NOTs inside the ladder borrow idle wires as dirty ancillas
 * when the register has any.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ncn/circuit.hpp"
#include "ncn/errors.hpp"
#include "ncn/linalg.hpp"
#include "ncn/matrices.hpp"
#include "ncn/zyz.hpp"

namespace ncn {

/// A unitary that acts as `core` on span{|i>, |j>} (in that order) and as the
/// identity on every other basis state.
struct TwoLevelFactor {
  std::size_t i = 0;
  std::size_t j = 1;
  ComplexMatrix core = ComplexMatrix::identity(2);
};

/// Entries below this magnitude count as already eliminated.
inline constexpr double kEliminationTol = 1e-12;

inline ComplexMatrix embed_two_level(const TwoLevelFactor &f, std::size_t dim) {
  if (f.i >= f.j || f.j >= dim) throw DimensionError("two-level indices out of range");
  std::vector<Complex> e(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) e[r * dim + r] = 1.0;
  e[f.i * dim + f.i] = f.core(0, 0);
  e[f.i * dim + f.j] = f.core(0, 1);
  e[f.j * dim + f.i] = f.core(1, 0);
  e[f.j * dim + f.j] = f.core(1, 1);
  return {dim, std::move(e)};
}

namespace detail {

inline std::size_t gray(std::size_t i) { return i ^ (i >> 1); }

/// Nearest-unitary cleanup of a 2x2 matrix by Gram-Schmidt on its rows.
inline ComplexMatrix orthonormalize2(Complex a, Complex b, Complex c, Complex d) {
  const double n0 = std::sqrt(std::norm(a) + std::norm(b));
  a /= n0;
  b /= n0;
  const Complex proj = std::conj(a) * c + std::conj(b) * d;
  c -= proj * a;
  d -= proj * b;
  const double n1 = std::sqrt(std::norm(c) + std::norm(d));
  return {{a, b}, {c / n1, d / n1}};
}

/// Row operation on a dense row-major dim x dim buffer.
inline void apply_rows(std::vector<Complex> &w, std::size_t dim, std::size_t p,
                       std::size_t q, const ComplexMatrix &g) {
  for (std::size_t col = 0; col < dim; ++col) {
    const Complex x = w[p * dim + col], y = w[q * dim + col];
    w[p * dim + col] = g(0, 0) * x + g(0, 1) * y;
    w[q * dim + col] = g(1, 0) * x + g(1, 1) * y;
  }
}

/// Stores an operator acting on (p, q) in ascending index order.
inline TwoLevelFactor make_factor(std::size_t p, std::size_t q,
                                  const ComplexMatrix &core) {
  if (p < q) return {p, q, core};
  return {q, p, {{core(1, 1), core(1, 0)}, {core(0, 1), core(0, 0)}}};
}

inline std::optional<std::vector<TwoLevelFactor>> already_two_level(
    const ComplexMatrix &u) {
  const std::size_t n = u.dim();
  std::vector<std::size_t> support;
  for (std::size_t r = 0; r < n; ++r) {
    bool touched = false;
    for (std::size_t c = 0; c < n && !touched; ++c) {
      const Complex id = r == c ? 1.0 : 0.0;
      touched = std::abs(u(r, c) - id) > kEliminationTol ||
                std::abs(u(c, r) - id) > kEliminationTol;
    }
    if (touched) support.push_back(r);
    if (support.size() > 2) return std::nullopt;
  }
  if (support.empty()) return std::vector<TwoLevelFactor>{};
  if (support.size() == 1) support.push_back(support[0] ^ 1U);
  const std::size_t i = std::min(support[0], support[1]);
  const std::size_t j = std::max(support[0], support[1]);
  return std::vector<TwoLevelFactor>{
      {i, j, orthonormalize2(u(i, i), u(i, j), u(j, i), u(j, j))}};
}

}  // namespace detail

/**
 * Factors u into at most dim(dim-1)/2 two-level unitaries.
 *
 * The returned list is in application order: multiplying the embedded factors
 * as F_last ... F_first reproduces u.
 */
inline std::vector<TwoLevelFactor> two_level_factorize(const ComplexMatrix &u,
                                                       double tol = 1e-10) {
  qubit_count_for_dim(u.dim());
  require_unitary(u, tol, "two_level_factorize");
  if (auto direct = detail::already_two_level(u)) return *direct;

  using detail::gray;
  const std::size_t n = u.dim();
  std::vector<Complex> w(u.entries().begin(), u.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> Complex & { return w[r * n + c]; };

  // Eliminating operators G_1, G_2, ... with G_m ... G_1 u = I.
  std::vector<TwoLevelFactor> eliminators;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    const std::size_t col = gray(c);
    for (std::size_t r = n - 1; r > c; --r) {
      const std::size_t p = gray(r - 1), q = gray(r);
      const bool last_in_column = (r - 1 == c);
      ComplexMatrix g;
      if (last_in_column && c + 2 == n) {
        // The trailing 2x2 block is unitary on its own; invert it whole.
        const Complex a = at(p, p), b = at(p, q), cc = at(q, p), d = at(q, q);
        if (std::abs(a - 1.0) <= kEliminationTol && std::abs(d - 1.0) <= kEliminationTol &&
            std::abs(b) <= kEliminationTol && std::abs(cc) <= kEliminationTol) {
          continue;
        }
        g = detail::orthonormalize2(std::conj(a), std::conj(cc), std::conj(b),
                                    std::conj(d));
      } else {
        const Complex a = at(p, col);
        Complex b = at(q, col);
        if (std::abs(b) <= kEliminationTol) {
          if (!last_in_column || std::abs(a - 1.0) <= kEliminationTol) continue;
          b = 0.0;
        }
        const double norm = std::sqrt(std::norm(a) + std::norm(b));
        g = ComplexMatrix{{std::conj(a) / norm, std::conj(b) / norm},
                          {-b / norm, a / norm}};
      }
      detail::apply_rows(w, n, p, q, g);
      eliminators.push_back(detail::make_factor(p, q, g));
    }
  }

  // u = G_1^dagger ... G_m^dagger, so G_m^dagger is applied first.
  std::vector<TwoLevelFactor> out;
  out.reserve(eliminators.size());
  for (auto it = eliminators.rbegin(); it != eliminators.rend(); ++it) {
    out.push_back({it->i, it->j, adjoint(it->core)});
  }
  return out;
}

namespace detail {

/// A square root of a 2x2 unitary: (u + p I) / sqrt(tr u + 2p) with p^2 = det u.
/// Picking the sign of p that maximizes |tr u + 2p| keeps the division stable.
inline ComplexMatrix sqrt_unitary2(const ComplexMatrix &u) {
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const Complex tr = u(0, 0) + u(1, 1);
  Complex p = std::sqrt(det);
  if (std::abs(tr - 2.0 * p) > std::abs(tr + 2.0 * p)) p = -p;
  const Complex s = std::sqrt(tr + 2.0 * p);
  return orthonormalize2((u(0, 0) + p) / s, u(0, 1) / s, u(1, 0) / s,
                         (u(1, 1) + p) / s);
}

inline bool close_to(const ComplexMatrix &a, const ComplexMatrix &b,
                     double tol = kUnitarityTol) {
  return max_abs_diff(a, b) <= tol;
}

inline void push_1q(std::vector<Gate> &out, Qubit q, const ComplexMatrix &u) {
  out.push_back(Gate::generic_1q(q, u));
}

/// Controlled-u with two CNOTs: u = e^{i phi0} A X B X C with ABC = I.
inline void controlled_abc(std::vector<Gate> &out, Qubit c, Qubit t,
                           const ComplexMatrix &u) {
  const ZyzAngles z = zyz_decompose(u);
  const ComplexMatrix a = matmul(mat::rz(z.gamma), mat::ry(z.beta / 2.0));
  const ComplexMatrix b =
      matmul(mat::ry(-z.beta / 2.0), mat::rz(-(z.alpha + z.gamma) / 2.0));
  const ComplexMatrix cc = mat::rz((z.alpha - z.gamma) / 2.0);
  push_1q(out, t, cc);
  out.push_back(Gate::cnot(c, t));
  push_1q(out, t, b);
  out.push_back(Gate::cnot(c, t));
  push_1q(out, t, a);
  if (normalize_angle(z.phi0) != 0.0) {
    push_1q(out, c, {{1.0, 0.0}, {0.0, std::polar(1.0, z.phi0)}});
  }
}

inline ComplexMatrix t_gate(bool dagger) {
  return {{1.0, 0.0}, {0.0, std::polar(1.0, dagger ? -kPi / 4.0 : kPi / 4.0)}};
}

/// Six-CNOT Toffoli.
inline void toffoli_gates(std::vector<Gate> &out, Qubit c1, Qubit c2, Qubit t) {
  const ComplexMatrix h = mat::hadamard(), tg = t_gate(false), td = t_gate(true);
  push_1q(out, t, h);
  out.push_back(Gate::cnot(c2, t));
  push_1q(out, t, td);
  out.push_back(Gate::cnot(c1, t));
  push_1q(out, t, tg);
  out.push_back(Gate::cnot(c2, t));
  push_1q(out, t, td);
  out.push_back(Gate::cnot(c1, t));
  push_1q(out, c2, tg);
  push_1q(out, t, tg);
  push_1q(out, t, h);
  out.push_back(Gate::cnot(c1, c2));
  push_1q(out, c1, tg);
  push_1q(out, c2, td);
  out.push_back(Gate::cnot(c1, c2));
}

inline std::vector<Qubit> with(std::vector<Qubit> v, Qubit extra) {
  v.push_back(extra);
  return v;
}

inline void mcx_gates(std::vector<Gate> &out, const std::vector<Qubit> &ctrls,
                      Qubit t, const std::vector<Qubit> &free);

/// C^n(u) = C(V)[c_n -> t] C^{n-1}X[-> c_n] C(V^dag)[c_n -> t] C^{n-1}X[-> c_n]
///          C^{n-1}(V)[-> t],  V^2 = u.
inline void ladder_gates(std::vector<Gate> &out, const std::vector<Qubit> &ctrls,
                         Qubit t, const ComplexMatrix &u,
                         const std::vector<Qubit> &free);

inline void mcu_gates(std::vector<Gate> &out, const std::vector<Qubit> &ctrls,
                      Qubit t, const ComplexMatrix &u,
                      const std::vector<Qubit> &free) {
  if (ctrls.empty()) {
    push_1q(out, t, u);
  } else if (close_to(u, mat::pauli_x())) {
    mcx_gates(out, ctrls, t, free);
  } else if (ctrls.size() == 1) {
    controlled_abc(out, ctrls[0], t, u);
  } else {
    ladder_gates(out, ctrls, t, u, free);
  }
}

inline void ladder_gates(std::vector<Gate> &out, const std::vector<Qubit> &ctrls,
                         Qubit t, const ComplexMatrix &u,
                         const std::vector<Qubit> &free) {
  const ComplexMatrix v = sqrt_unitary2(u);
  const Qubit last = ctrls.back();
  const std::vector<Qubit> rest(ctrls.begin(), ctrls.end() - 1);
  const auto free_for_x = with(free, t);
  controlled_abc(out, last, t, v);
  mcx_gates(out, rest, last, free_for_x);
  controlled_abc(out, last, t, adjoint(v));
  mcx_gates(out, rest, last, free_for_x);
  mcu_gates(out, rest, t, v, with(free, last));
}

/// C^m X with m - 2 dirty ancillas and 4(m - 2) Toffolis.
inline void mcx_dirty_chain(std::vector<Gate> &out, const std::vector<Qubit> &c,
                            const std::vector<Qubit> &a, Qubit t) {
  const std::size_t m = c.size();
  auto top = [&] { toffoli_gates(out, c[m - 1], a[m - 3], t); };
  auto down = [&] {
    for (std::size_t i = m - 3; i >= 1; --i) toffoli_gates(out, c[i + 1], a[i - 1], a[i]);
  };
  auto base = [&] { toffoli_gates(out, c[0], c[1], a[0]); };
  auto up = [&] {
    for (std::size_t i = 1; i + 2 < m; ++i) toffoli_gates(out, c[i + 1], a[i - 1], a[i]);
  };
  for (int rep = 0; rep < 2; ++rep) {
    top();
    down();
    base();
    up();
  }
}

inline void mcx_gates(std::vector<Gate> &out, const std::vector<Qubit> &ctrls,
                      Qubit t, const std::vector<Qubit> &free) {
  const std::size_t m = ctrls.size();
  if (m == 0) {
    push_1q(out, t, mat::pauli_x());
  } else if (m == 1) {
    out.push_back(Gate::cnot(ctrls[0], t));
  } else if (m == 2) {
    toffoli_gates(out, ctrls[0], ctrls[1], t);
  } else if (free.size() >= m - 2) {
    mcx_dirty_chain(out, ctrls, free, t);
  } else if (!free.empty()) {
    // Split across one borrowed wire; each half then has enough idle wires
    // for the dirty chain.
    const Qubit a = free[0];
    const std::size_t m1 = (m + 1) / 2;
    const std::vector<Qubit> c1(ctrls.begin(), ctrls.begin() + static_cast<std::ptrdiff_t>(m1));
    const std::vector<Qubit> c2(ctrls.begin() + static_cast<std::ptrdiff_t>(m1), ctrls.end());
    const auto free1 = with(c2, t);
    const auto c2a = with(c2, a);
    for (int rep = 0; rep < 2; ++rep) {
      mcx_gates(out, c1, a, free1);
      mcx_gates(out, c2a, t, c1);
    }
  } else {
    ladder_gates(out, ctrls, t, mat::pauli_x(), free);
  }
}

}  // namespace detail

/// Gates realizing u on `target` conditioned on every wire in `controls`
/// matching the corresponding bit of `pattern` (X-conjugation for zeros).
inline std::vector<Gate> fully_controlled_gates(const std::vector<Qubit> &controls,
                                                const std::vector<bool> &pattern,
                                                Qubit target,
                                                const ComplexMatrix &u,
                                                const std::vector<Qubit> &idle = {}) {
  if (pattern.size() != controls.size()) throw ArityError("control pattern size mismatch");
  std::vector<Gate> out;
  const ComplexMatrix x = mat::pauli_x();
  for (std::size_t i = 0; i < controls.size(); ++i)
    if (!pattern[i]) out.push_back(Gate::generic_1q(controls[i], x));
  detail::mcu_gates(out, controls, target, u, idle);
  for (std::size_t i = 0; i < controls.size(); ++i)
    if (!pattern[i]) out.push_back(Gate::generic_1q(controls[i], x));
  return out;
}

/**
 * Realizes one two-level factor on k qubits with CNOT and GENERIC_1Q gates.
 *
 * When i and j differ in more than one bit, a Gray-code walk of fully
 * controlled NOTs first brings |i> next to |j>, and is undone afterwards.
 */
inline Circuit two_level_to_gates(const TwoLevelFactor &f, std::size_t k) {
  const std::size_t dim = std::size_t{1} << k;
  if (f.i >= f.j || f.j >= dim) throw DimensionError("two-level indices out of range");
  Circuit circuit(k);
  auto bit_of = [k](std::size_t index, Qubit q) {
    return ((index >> (k - 1 - q)) & 1U) != 0;
  };
  auto qubit_of_mask = [k](std::size_t mask) {
    Qubit q = 0;
    while (((mask >> (k - 1 - q)) & 1U) == 0) ++q;
    return q;
  };
  auto controlled_on = [&](std::size_t state, Qubit target, const ComplexMatrix &u) {
    std::vector<Qubit> controls;
    std::vector<bool> pattern;
    for (Qubit q = 0; q < k; ++q) {
      if (q == target) continue;
      controls.push_back(q);
      pattern.push_back(bit_of(state, q));
    }
    return fully_controlled_gates(controls, pattern, target, u);
  };

  // Gray walk: flip the differing bits of i one at a time, high to low,
  // stopping one short of j.
  std::vector<std::pair<std::size_t, Qubit>> moves;
  std::size_t cur = f.i;
  std::size_t diff = f.i ^ f.j;
  while ((diff & (diff - 1)) != 0) {
    std::size_t high = std::size_t{1} << (std::bit_width(diff) - 1);
    moves.emplace_back(cur, qubit_of_mask(high));
    cur ^= high;
    diff ^= high;
  }
  const Qubit target = qubit_of_mask(diff);
  const ComplexMatrix core =
      bit_of(cur, target) ? matmul(mat::pauli_x(), matmul(f.core, mat::pauli_x()))
                          : f.core;
  const ComplexMatrix x = mat::pauli_x();
  for (const auto &[state, q] : moves) circuit.append(controlled_on(state, q, x));
  circuit.append(controlled_on(cur, target, core));
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    circuit.append(controlled_on(it->first, it->second, x));
  }
  return circuit;
}

namespace detail {

inline bool is_phase_times_identity(const Gate::Payload &u, double tol = 1e-13) {
  return std::abs(u[1]) <= tol && std::abs(u[2]) <= tol &&
         std::abs(u[0] - u[3]) <= tol;
}

}  // namespace detail

/**
 * Local cleanup on a CNOT + GENERIC_1Q list: merges consecutive single-qubit
 * gates on a wire, cancels back-to-back identical CNOTs and drops single-qubit
 * gates that are a pure phase. The result equals the input up to global phase.
 */
inline std::vector<Gate> simplify_cnot_1q(std::vector<Gate> gates) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::optional<Gate>> out;
    out.reserve(gates.size());
    std::vector<std::ptrdiff_t> last;  // per wire, index into out or -1
    auto last_of = [&](Qubit q) -> std::ptrdiff_t & {
      if (q >= last.size()) last.resize(q + 1, -1);
      return last[q];
    };
    for (const Gate &g : gates) {
      if (g.kind() == GateKind::kGeneric1q) {
        std::ptrdiff_t &li = last_of(g.qubit(0));
        if (li >= 0 && out[static_cast<std::size_t>(li)] &&
            out[static_cast<std::size_t>(li)]->kind() == GateKind::kGeneric1q) {
          auto &prev = *out[static_cast<std::size_t>(li)];
          const auto &p = prev.payload();
          const auto &n = g.payload();
          prev = Gate::generic_1q(
              g.qubit(0),
              detail::orthonormalize2(n[0] * p[0] + n[1] * p[2], n[0] * p[1] + n[1] * p[3],
                                      n[2] * p[0] + n[3] * p[2], n[2] * p[1] + n[3] * p[3]));
          changed = true;
          continue;
        }
        out.emplace_back(g);
        li = static_cast<std::ptrdiff_t>(out.size()) - 1;
      } else if (g.kind() == GateKind::kCnot) {
        last_of(std::max(g.qubit(0), g.qubit(1)));  // grow first; references below stay valid
        std::ptrdiff_t &lc = last_of(g.qubit(0));
        std::ptrdiff_t &lt = last_of(g.qubit(1));
        if (lc >= 0 && lc == lt && out[static_cast<std::size_t>(lc)] &&
            *out[static_cast<std::size_t>(lc)] == g) {
          out[static_cast<std::size_t>(lc)].reset();
          lc = lt = -2;  // wire history is now opaque; stop merging across it
          changed = true;
          continue;
        }
        out.emplace_back(g);
        lc = lt = static_cast<std::ptrdiff_t>(out.size()) - 1;
      } else {
        throw DialectError("simplify_cnot_1q: only CNOT and GENERIC_1Q are supported");
      }
    }
    gates.clear();
    for (auto &g : out) {
      if (!g) continue;
      if (g->kind() == GateKind::kGeneric1q && detail::is_phase_times_identity(g->payload())) {
        changed = true;
        continue;
      }
      gates.push_back(*g);
    }
  }
  return gates;
}

/**
 * Rewrites any GENERAL circuit into CNOT + GENERIC_1Q gates: named 1q kinds
 * become payloads, controlled kinds use the two-CNOT form and TOFFOLI the
 * six-CNOT form.
 */
inline Circuit lower_to_cnot_1q(const Circuit &c) {
  std::vector<Gate> gates;
  for (const Gate &g : c.gates()) {
    switch (g.kind()) {
      case GateKind::kCnot:
      case GateKind::kGeneric1q:
        gates.push_back(g);
        break;
      case GateKind::kNegator:
      case GateKind::kHadamard:
      case GateKind::kRy:
      case GateKind::kRz:
        gates.push_back(Gate::generic_1q(g.qubit(0), g.target_matrix()));
        break;
      case GateKind::kToffoli:
        detail::toffoli_gates(gates, g.qubit(0), g.qubit(1), g.qubit(2));
        break;
      case GateKind::kCSqrtNot:
      case GateKind::kCSqrtNotDag:
      case GateKind::kCNegator:
      case GateKind::kControlled1q:
        detail::controlled_abc(gates, g.qubit(0), g.qubit(1), g.target_matrix());
        break;
    }
  }
  Circuit out(c.width());
  out.append(simplify_cnot_1q(std::move(gates)));
  return out;
}

/**
 * Decomposes u into a GENERAL circuit made of CNOT and GENERIC_1Q gates whose
 * matrix equals u up to a global phase.
 */
inline Circuit synthesize(const ComplexMatrix &u, double tol = 1e-10) {
  const std::size_t k = qubit_count_for_dim(u.dim());
  if (k == 0) throw DimensionError("synthesize: need at least one qubit");
  require_unitary(u, tol, "synthesize");
  Circuit out(k);
  if (k == 1) {
    out.append(Gate::generic_1q(0, detail::orthonormalize2(u(0, 0), u(0, 1), u(1, 0), u(1, 1))));
    return out;
  }
  std::vector<Gate> gates;
  for (const auto &f : two_level_factorize(u, tol)) {
    const Circuit part = two_level_to_gates(f, k);
    gates.insert(gates.end(), part.gates().begin(), part.gates().end());
  }
  out.append(simplify_cnot_1q(std::move(gates)));
  return out;
}

}  // namespace ncn
