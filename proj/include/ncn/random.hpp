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

/// @file Seeded random unitaries and states, plus random circuits for tests.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "ncn/circuit.hpp"
#include "ncn/linalg.hpp"

namespace ncn {

/// Haar-distributed unitary: Gram-Schmidt on the rows of a complex Gaussian
/// matrix (the implied R has a positive diagonal, which keeps the measure).
inline ComplexMatrix haar_unitary(std::size_t dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> e(dim * dim);
  for (auto &z : e) z = {gauss(rng), gauss(rng)};
  for (std::size_t i = 0; i < dim; ++i) {
    Complex *row = &e[i * dim];
    for (std::size_t j = 0; j < i; ++j) {
      const Complex *prev = &e[j * dim];
      Complex p = 0.0;
      for (std::size_t k = 0; k < dim; ++k) p += std::conj(prev[k]) * row[k];
      for (std::size_t k = 0; k < dim; ++k) row[k] -= p * prev[k];
    }
    double n = 0.0;
    for (std::size_t k = 0; k < dim; ++k) n += std::norm(row[k]);
    n = std::sqrt(n);
    for (std::size_t k = 0; k < dim; ++k) row[k] /= n;
  }
  return {dim, std::move(e)};
}

/// Uniformly random unit vector.
inline StateVector random_state(std::size_t dim, std::mt19937_64 &rng) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> a(dim);
  for (auto &z : a) z = {gauss(rng), gauss(rng)};
  return StateVector(std::move(a)).normalized();
}

/// Random circuit over every gate kind, or only NCN kinds.
inline Circuit random_circuit(std::size_t width, std::size_t length, std::mt19937_64 &rng,
                              Dialect dialect = Dialect::kGeneral) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::uniform_int_distribution<std::size_t> wire(0, width - 1);
  Circuit c(width, dialect);
  std::vector<GateKind> kinds;
  for (GateKind k : kAllGateKinds) {
    if (arity_of(k) > width) continue;
    if (dialect == Dialect::kNcn && !is_ncn_kind(k)) continue;
    kinds.push_back(k);
  }
  std::uniform_int_distribution<std::size_t> pick(0, kinds.size() - 1);
  while (c.size() < length) {
    const GateKind k = kinds[pick(rng)];
    std::vector<Qubit> qs;
    while (qs.size() < arity_of(k)) {
      const Qubit q = wire(rng);
      if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
    }
    Gate::Payload payload{};
    if (has_payload(k)) {
      const ComplexMatrix u = haar_unitary(2, rng);
      payload = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
    }
    c.append(Gate::make(k, qs, angle(rng), payload));
  }
  return c;
}

}  // namespace ncn
