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
 * Two-qubit Grover search with an oracle wire, run through the NCN rewrite.
 *
 * Wires: q0, q1 search register (q0 is the high bit of omega), q2 the oracle
 * wire prepared in |1>. One iteration of H, U_omega, diffusion finds omega
 * with certainty.
 */

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncn/circuit.hpp"
#include "ncn/cost.hpp"
#include "ncn/errors.hpp"
#include "ncn/matrices.hpp"
#include "ncn/simulator.hpp"
#include "ncn/synth.hpp"
#include "ncn/transform.hpp"

namespace ncn {

/// |001>: search wires |00>, oracle wire |1>.
inline StateVector grover_input() { return StateVector::basis(8, 1); }

/// U_omega: flips the oracle wire iff the search register holds omega.
inline void append_grover_oracle(Circuit &c, std::size_t omega) {
  const ComplexMatrix x = mat::pauli_x();
  const bool b0 = (omega & 2U) != 0, b1 = (omega & 1U) != 0;
  if (!b0) c.append(Gate::generic_1q(0, x));
  if (!b1) c.append(Gate::generic_1q(1, x));
  c.append(Gate::toffoli(0, 1, 2));
  if (!b0) c.append(Gate::generic_1q(0, x));
  if (!b1) c.append(Gate::generic_1q(1, x));
}

/**
 * Diffusion on (q0, q1) as H H, X X, CNOT, Rz(-pi/2), CNOT, Rz(pi/2), X X, H H.
 * The Rz(pi/2) on q0 supplies the relative phase that the CNOT-Rz-CNOT-Rz
 * core alone misses; without it the marked state is found with probability
 * 1/2 only.
 */
inline void append_grover_diffusion(Circuit &c) {
  const ComplexMatrix x = mat::pauli_x();
  c.append(Gate::hadamard(0));
  c.append(Gate::hadamard(1));
  c.append(Gate::generic_1q(0, x));
  c.append(Gate::generic_1q(1, x));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::rz(1, -kPi / 2.0));
  c.append(Gate::cnot(0, 1));
  c.append(Gate::rz(1, kPi / 2.0));
  c.append(Gate::rz(0, kPi / 2.0));
  c.append(Gate::generic_1q(0, x));
  c.append(Gate::generic_1q(1, x));
  c.append(Gate::hadamard(0));
  c.append(Gate::hadamard(1));
}

/// The search circuit with named gates (H, TOF, RZ, U1Q).
inline Circuit grover_circuit(std::size_t omega) {
  if (omega > 3) throw DimensionError("grover: omega must lie in 0..3");
  Circuit c(3);
  for (Qubit q = 0; q < 3; ++q) c.append(Gate::hadamard(q));
  append_grover_oracle(c, omega);
  append_grover_diffusion(c);
  return c;
}

struct GroverRun {
  std::size_t omega = 0;
  Circuit source{3};
  Circuit ncn{4, Dialect::kNcn, Qubit{0}};
  CostReport cost;
  Histogram histogram;  ///< over (q0, q1)
  double p_omega = 0.0;
  double ancilla_distance = 0.0;
};

/// Lowers, rewrites, simulates from |-> (x) |001> and measures q0 q1.
inline GroverRun run_grover(std::size_t omega, std::size_t shots, std::uint64_t seed) {
  GroverRun run;
  run.omega = omega;
  run.source = lower_to_cnot_1q(grover_circuit(omega));
  run.ncn = transform(run.source);
  run.cost = count(run.source, run.ncn);
  const StateVector out = apply(run.ncn, phi_extend(grover_input()));
  run.ancilla_distance = ancilla_distance_to_minus(out);
  const StateVector reduced = psi_reduce(out);
  const std::array<Qubit, 2> search{0, 1};
  run.histogram = measure(reduced, search, shots, seed);
  run.p_omega = run.histogram.exact[omega];
  return run;
}

}  // namespace ncn
