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
 * Statevector simulation with per-gate local updates, the ancilla extension
 * and removal maps, and computational-basis measurement.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ncn/circuit.hpp"
#include "ncn/errors.hpp"
#include "ncn/linalg.hpp"

namespace ncn {

namespace detail {

/// Applies g in place; amplitudes use qubit 0 as the most significant bit.
inline void apply_gate_inplace(std::vector<Complex> &amps, const Gate &g,
                               std::size_t width) {
  for (Qubit q : g.qubits()) {
    if (q >= width) throw ArityError("apply: gate wire outside register");
  }
  const ComplexMatrix u = g.target_matrix();
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  auto mask_of = [width](Qubit q) { return std::size_t{1} << (width - 1 - q); };
  const std::size_t tmask = mask_of(g.target());
  std::size_t cmask = 0;
  for (std::size_t i = 0; i + 1 < g.qubits().size(); ++i) cmask |= mask_of(g.qubit(i));
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & tmask) != 0 || (i & cmask) != cmask) continue;
    const std::size_t j = i | tmask;
    const Complex a = amps[i], b = amps[j];
    amps[i] = u00 * a + u01 * b;
    amps[j] = u10 * a + u11 * b;
  }
}

}  // namespace detail

/// Gates applied in order to a copy of s.
inline StateVector apply_gates(std::span<const Gate> gates, std::size_t width,
                               const StateVector &s) {
  if (s.dim() != (std::size_t{1} << width)) {
    throw DimensionError("apply: state dimension " + std::to_string(s.dim()) +
                         " does not match width " + std::to_string(width));
  }
  std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  for (const Gate &g : gates) detail::apply_gate_inplace(amps, g, width);
  return StateVector(std::move(amps));
}

inline StateVector apply(const Circuit &c, const StateVector &s) {
  return apply_gates(c.gates(), c.width(), s);
}

/// (|0> - |1>) / sqrt(2)
inline StateVector minus_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return StateVector({h, -h});
}

/// |-> (x) s, the ancilla becoming qubit 0.
inline StateVector phi_extend(const StateVector &s) {
  const std::size_t n = s.dim();
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Complex> out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = h * s[i];
    out[n + i] = -h * s[i];
  }
  return StateVector(std::move(out));
}

/// Reduced 2x2 density matrix of qubit 0.
inline ComplexMatrix ancilla_density(const StateVector &s) {
  if (s.dim() < 2) throw DimensionError("ancilla_density: need at least one qubit");
  const std::size_t n = s.dim() / 2;
  Complex r00 = 0.0, r01 = 0.0, r11 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    r00 += std::norm(s[i]);
    r11 += std::norm(s[n + i]);
    r01 += s[i] * std::conj(s[n + i]);
  }
  return {{r00, r01}, {std::conj(r01), r11}};
}

/// tr(rho^2) of the ancilla.
inline double ancilla_purity(const StateVector &s) {
  const ComplexMatrix r = ancilla_density(s);
  return std::norm(r(0, 0)) + std::norm(r(1, 1)) + 2.0 * std::norm(r(0, 1));
}

/// Trace distance between the ancilla's reduced state and |-><-|.
inline double ancilla_distance_to_minus(const StateVector &s) {
  const ComplexMatrix r = ancilla_density(s);
  // rho - |-><-| is traceless Hermitian [[a, b], [b*, -a]].
  const double a = r(0, 0).real() - 0.5;
  const Complex b = r(0, 1) + 0.5;
  return std::sqrt(a * a + std::norm(b));
}

inline constexpr double kPurityTol = 1e-9;

/**
 * Drops a product ancilla on qubit 0 and returns the normalized remainder.
 * Throws EntangledAncillaError when the ancilla purity is below 1 - tol.
 */
inline StateVector psi_reduce(const StateVector &s, double tol = kPurityTol) {
  const double purity = ancilla_purity(s);
  if (!(purity >= 1.0 - tol)) {
    throw EntangledAncillaError(
        "psi_reduce: ancilla is entangled (purity " + std::to_string(purity) + ")",
        purity);
  }
  const std::size_t n = s.dim() / 2;
  const auto amps = s.amplitudes();
  double w0 = 0.0, w1 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w0 += std::norm(amps[i]);
    w1 += std::norm(amps[n + i]);
  }
  const std::size_t off = w0 >= w1 ? 0 : n;
  return StateVector(std::vector<Complex>(amps.begin() + static_cast<std::ptrdiff_t>(off),
                                          amps.begin() + static_cast<std::ptrdiff_t>(off + n)))
      .normalized();
}

namespace detail {

inline std::size_t outcome_of(std::size_t index, std::span<const Qubit> qubits,
                              std::size_t width) {
  std::size_t out = 0;
  for (Qubit q : qubits) out = (out << 1) | ((index >> (width - 1 - q)) & 1U);
  return out;
}

inline void check_measured(std::span<const Qubit> qubits, std::size_t width) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] >= width) throw ArityError("measure: qubit outside register");
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j]) throw ArityError("measure: qubit listed twice");
  }
}

}  // namespace detail

/// Born probabilities over the measured wires; qubits[0] is the high bit.
inline std::vector<double> probabilities(const StateVector &s,
                                         std::span<const Qubit> qubits) {
  const std::size_t width = qubit_count_for_dim(s.dim());
  detail::check_measured(qubits, width);
  std::vector<double> p(std::size_t{1} << qubits.size(), 0.0);
  for (std::size_t i = 0; i < s.dim(); ++i)
    p[detail::outcome_of(i, qubits, width)] += std::norm(s[i]);
  return p;
}

struct MeasurementResult {
  std::size_t outcome = 0;
  double probability = 0.0;
  StateVector post_state;
};

/// Projects s onto `outcome` of the measured wires and renormalizes.
inline MeasurementResult collapse(const StateVector &s, std::span<const Qubit> qubits,
                                  std::size_t outcome) {
  const std::size_t width = qubit_count_for_dim(s.dim());
  detail::check_measured(qubits, width);
  std::vector<Complex> amps(s.dim(), 0.0);
  double p = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (detail::outcome_of(i, qubits, width) != outcome) continue;
    amps[i] = s[i];
    p += std::norm(s[i]);
  }
  if (p <= 0.0) throw Error("collapse: outcome has zero probability");
  const double k = 1.0 / std::sqrt(p);
  for (auto &a : amps) a *= k;
  return {outcome, p, StateVector(std::move(amps))};
}

struct Histogram {
  std::vector<double> exact;
  std::vector<std::size_t> counts;
  std::size_t shots = 0;
};

/// Exact probabilities plus `shots` seeded samples.
inline Histogram measure(const StateVector &s, std::span<const Qubit> qubits,
                         std::size_t shots, std::uint64_t seed) {
  Histogram h;
  h.exact = probabilities(s, qubits);
  h.counts.assign(h.exact.size(), 0);
  h.shots = shots;
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(h.exact.begin(), h.exact.end());
  for (std::size_t i = 0; i < shots; ++i) ++h.counts[pick(rng)];
  return h;
}

/// One seeded shot with its post-measurement state.
inline MeasurementResult measure_once(const StateVector &s, std::span<const Qubit> qubits,
                                      std::mt19937_64 &rng) {
  const auto p = probabilities(s, qubits);
  std::discrete_distribution<std::size_t> pick(p.begin(), p.end());
  return collapse(s, qubits, pick(rng));
}

}  // namespace ncn
