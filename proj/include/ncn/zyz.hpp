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
 * Single-qubit Euler factorization U = e^{i phi0} Rz(gamma) Ry(beta) Rz(alpha)
 * using the rotation conventions of matrices.hpp.
 */

#pragma once

#include <cmath>

#include "ncn/errors.hpp"
#include "ncn/linalg.hpp"
#include "ncn/matrices.hpp"

namespace ncn {

inline ComplexMatrix rz(double theta) { return mat::rz(theta); }
inline ComplexMatrix ry(double theta) { return mat::ry(theta); }

/// Global phase plus the three Euler angles.
struct ZyzAngles {
  double phi0 = 0.0;   ///< [0, 2pi)
  double alpha = 0.0;  ///< [0, 2pi), applied first
  double beta = 0.0;   ///< [0, pi]
  double gamma = 0.0;  ///< [0, 2pi), applied last
};

/// e^{i phi0} Rz(gamma) Ry(beta) Rz(alpha)
inline ComplexMatrix reconstruct(const ZyzAngles &a) {
  return scale(std::polar(1.0, a.phi0),
               matmul(rz(a.gamma), matmul(ry(a.beta), rz(a.alpha))));
}

namespace detail {

/// Below this magnitude the cos/sin half of the matrix is treated as zero and
/// the alpha/gamma split becomes the canonical alpha = 0.
inline constexpr double kZyzDegenerate = 1e-14;

/// Folds a z-rotation angle into [0, 2pi); Rz is 4pi-periodic, so every
/// 2pi shift flips the sign, which is pushed into the global phase.
inline void wrap_rz(double &angle, double &phase) {
  const double turns = std::floor(angle / kTwoPi);
  angle -= turns * kTwoPi;
  if (angle >= kTwoPi || angle < 0.0) angle = 0.0;
  if (std::fmod(std::abs(turns), 2.0) == 1.0) phase += kPi;
}

}  // namespace detail

inline ZyzAngles zyz_decompose(const ComplexMatrix &u, double tol = 1e-10) {
  if (u.dim() != 2) throw DimensionError("zyz_decompose: expected a 2x2 matrix");
  require_unitary(u, tol, "zyz_decompose");

  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  double phi0 = std::arg(det) / 2.0;
  const Complex unphase = std::polar(1.0, -phi0);
  // v is in SU(2): v = [[c e^{i p2}, s e^{i p3}], [-s e^{-i p3}, c e^{-i p2}]].
  const Complex v00 = unphase * u(0, 0), v01 = unphase * u(0, 1);
  const Complex v10 = unphase * u(1, 0), v11 = unphase * u(1, 1);
  const Complex d = (v00 + std::conj(v11)) / 2.0;
  const Complex o = (v01 - std::conj(v10)) / 2.0;
  const double c = std::abs(d), s = std::abs(o);
  const double beta = 2.0 * std::atan2(s, c);

  double p2, p3;
  if (s < detail::kZyzDegenerate) {
    p2 = p3 = std::arg(d);
  } else if (c < detail::kZyzDegenerate) {
    p2 = p3 = std::arg(o);
  } else {
    p2 = std::arg(d);
    p3 = std::arg(o);
  }
  double alpha = p3 - p2;
  double gamma = -p2 - p3;
  detail::wrap_rz(alpha, phi0);
  detail::wrap_rz(gamma, phi0);
  return {normalize_angle(phi0), alpha, beta, gamma};
}

}  // namespace ncn
