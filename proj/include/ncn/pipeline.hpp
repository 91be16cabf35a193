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
 * End-to-end pipeline: synthesis and rewriting, then the ancilla contract check
 * U|psi> = Psi(N Phi(|psi>)) by simulation.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ncn/circuit.hpp"
#include "ncn/cost.hpp"
#include "ncn/errors.hpp"
#include "ncn/linalg.hpp"
#include "ncn/random.hpp"
#include "ncn/simulator.hpp"
#include "ncn/synth.hpp"
#include "ncn/transform.hpp"

namespace ncn {

struct VerifyReport {
  std::size_t states_checked = 0;
  double worst_deficit = 0.0;           ///< 1 - |<U psi | Psi(N Phi psi)>|
  double worst_ancilla_distance = 0.0;  ///< trace distance to |-><-|
  bool entangled = false;               ///< psi_reduce refused some output
  bool passed = false;
};

inline constexpr std::size_t kVerifyRandomStates = 20;
inline constexpr std::uint64_t kVerifySeed = 20260;

/**
 * Runs the NCN circuit on |-> (x) |psi> for every basis state and
 * `random_states` random states and compares against U|psi>.
 */
inline VerifyReport verify_contract(const ComplexMatrix &u, const Circuit &ncn,
                                    double tol = kVerifyTol,
                                    std::size_t random_states = kVerifyRandomStates,
                                    std::uint64_t seed = kVerifySeed) {
  if (ncn.dialect() != Dialect::kNcn) throw DialectError("verify: circuit is not NCN");
  if (ncn.ancilla() != Qubit{0}) {
    throw DimensionError("verify: circuit must declare ancilla=0");
  }
  const std::size_t k = qubit_count_for_dim(u.dim());
  if (ncn.width() != k + 1) {
    throw DimensionError("verify: unitary acts on " + std::to_string(k) +
                         " qubit(s) but the circuit has width " +
                         std::to_string(ncn.width()));
  }
  VerifyReport rep;
  auto check = [&](const StateVector &psi) {
    const StateVector out = apply(ncn, phi_extend(psi));
    rep.worst_ancilla_distance =
        std::max(rep.worst_ancilla_distance, ancilla_distance_to_minus(out));
    double deficit = 1.0;
    try {
      deficit = fidelity_deficit(psi_reduce(out), matvec(u, psi));
    } catch (const EntangledAncillaError &) {
      rep.entangled = true;
    }
    rep.worst_deficit = std::max(rep.worst_deficit, deficit);
    ++rep.states_checked;
  };
  for (std::size_t i = 0; i < u.dim(); ++i) check(StateVector::basis(u.dim(), i));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_states; ++i) check(random_state(u.dim(), rng));
  rep.passed = !rep.entangled && rep.worst_deficit <= tol && rep.worst_ancilla_distance <= tol;
  return rep;
}

struct TranspileResult {
  Circuit source{1};
  Circuit output{2, Dialect::kNcn, Qubit{0}};
  CostReport cost;
  VerifyReport verify;
};

/// Synthesizes and rewrites a unitary, then counts and checks the result.
inline TranspileResult transpile_matrix(const ComplexMatrix &u, double tol = kVerifyTol,
                                        const TransformOptions &opt = {},
                                        std::vector<TraceStep> *trace = nullptr) {
  TranspileResult r;
  r.source = synthesize(u);
  r.output = transform(r.source, opt, trace);
  r.cost = count(r.source, r.output);
  r.verify = verify_contract(u, r.output, tol);
  return r;
}

/// As transpile_matrix, starting from a GENERAL circuit; the reference
/// unitary is its dense matrix.
inline TranspileResult transpile_circuit(const Circuit &c, double tol = kVerifyTol,
                                         const TransformOptions &opt = {},
                                         std::vector<TraceStep> *trace = nullptr) {
  if (c.dialect() != Dialect::kGeneral) {
    throw DialectError("transpile: input circuit is already NCN");
  }
  TranspileResult r;
  r.source = lower_to_cnot_1q(c);
  r.output = transform(r.source, opt, trace);
  r.cost = count(r.source, r.output);
  r.verify = verify_contract(circuit_matrix(c), r.output, tol);
  return r;
}

}  // namespace ncn
