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
 * Fixed 2x2 and 4x4 matrices used by gates.
 *
 * Rotation conventions:
 *   Rz(t) = diag(e^{-it/2}, e^{it/2})
 *   Ry(t) = [[cos(t/2), sin(t/2)], [-sin(t/2), cos(t/2)]]
 * With these, Rz(pi) Ry(pi/2) = -i H and Rz(pi) Ry(pi) = -i NOT.
 */

#pragma once

#include <cmath>

#include "ncn/linalg.hpp"

namespace ncn {

/// Maps an angle into [0, 2pi).
inline double normalize_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

/// Distance between two angles on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
  const double d = normalize_angle(a - b);
  return std::min(d, kTwoPi - d);
}

/// e^{it}, exact at multiples of pi/2.
inline Complex unit_phase(double theta) {
  const double t = normalize_angle(theta);
  if (t == 0.0) return {1.0, 0.0};
  if (t == kPi / 2.0) return {0.0, 1.0};
  if (t == kPi) return {-1.0, 0.0};
  if (t == 3.0 * kPi / 2.0) return {0.0, -1.0};
  return std::polar(1.0, t);
}

namespace mat {

/// N(t) = 1/2 [[1 + e^{it}, 1 - e^{it}], [1 - e^{it}, 1 + e^{it}]]
inline ComplexMatrix negator(double theta) {
  const Complex e = unit_phase(theta);
  const Complex p = 0.5 * (1.0 + e), m = 0.5 * (1.0 - e);
  return {{p, m}, {m, p}};
}

inline ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

inline ComplexMatrix sqrt_not() {
  const Complex p{0.5, 0.5}, m{0.5, -0.5};
  return {{p, m}, {m, p}};
}

inline ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{h, h}, {h, -h}};
}

inline ComplexMatrix rz(double theta) {
  return {{std::polar(1.0, -theta / 2.0), 0.0},
          {0.0, std::polar(1.0, theta / 2.0)}};
}

inline ComplexMatrix ry(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return {{c, s}, {-s, c}};
}

/// |0><0| (x) I + |1><1| (x) u for a 2x2 u; control is the high qubit.
inline ComplexMatrix controlled(const ComplexMatrix &u) {
  if (u.dim() != 2) throw DimensionError("controlled: expected a 2x2 matrix");
  return {{1.0, 0.0, 0.0, 0.0},
          {0.0, 1.0, 0.0, 0.0},
          {0.0, 0.0, u(0, 0), u(0, 1)},
          {0.0, 0.0, u(1, 0), u(1, 1)}};
}

}  // namespace mat
}  // namespace ncn
