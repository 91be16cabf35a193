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

#include <gtest/gtest.h>

#include <random>

#include "ncn/random.hpp"
#include "ncn/zyz.hpp"

namespace ncn {
namespace {

const Complex kI{0.0, 1.0};

TEST(Rotations, RzZeroIsIdentity) {
  EXPECT_EQ(rz(0.0), ComplexMatrix::identity(2));
}

TEST(Rotations, RyHalfTurn) {
  const ComplexMatrix expected{{0.0, 1.0}, {-1.0, 0.0}};
  EXPECT_LE(max_abs_diff(ry(kPi), expected), 1e-16);
}

TEST(Rotations, RzRyQuarterIsMinusIHadamard) {
  EXPECT_LE(max_abs_diff(matmul(rz(kPi), ry(kPi / 2)), scale(-kI, mat::hadamard())), 1e-15);
}

TEST(Rotations, RzRyHalfIsMinusINot) {
  EXPECT_LE(max_abs_diff(matmul(rz(kPi), ry(kPi)), scale(-kI, mat::pauli_x())), 1e-15);
}

TEST(Zyz, IdentityGivesZeroAngles) {
  const ZyzAngles z = zyz_decompose(ComplexMatrix::identity(2));
  EXPECT_EQ(z.phi0, 0.0);
  EXPECT_EQ(z.alpha, 0.0);
  EXPECT_EQ(z.beta, 0.0);
  EXPECT_EQ(z.gamma, 0.0);
}

TEST(Zyz, HadamardAngles) {
  const ZyzAngles z = zyz_decompose(mat::hadamard());
  EXPECT_NEAR(z.beta, kPi / 2, 1e-15);
  EXPECT_NEAR(z.gamma, kPi, 1e-15);
  EXPECT_NEAR(z.alpha, 0.0, 1e-15);
  EXPECT_NEAR(z.phi0, kPi / 2, 1e-15);
}

TEST(Zyz, NotAngles) {
  const ZyzAngles z = zyz_decompose(mat::pauli_x());
  EXPECT_NEAR(z.beta, kPi, 1e-15);
  EXPECT_LE(max_abs_diff(reconstruct(z), mat::pauli_x()), 1e-15);
}

TEST(Zyz, ThousandHaarSamplesReconstruct) {
  std::mt19937_64 rng(41);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const ComplexMatrix u = haar_unitary(2, rng);
    worst = std::max(worst, max_abs_diff(reconstruct(zyz_decompose(u)), u));
  }
  EXPECT_LE(worst, 1e-12);
}

TEST(Zyz, AnglesInCanonicalRanges) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 1000; ++t) {
    const ZyzAngles z = zyz_decompose(haar_unitary(2, rng));
    EXPECT_GE(z.beta, 0.0);
    EXPECT_LE(z.beta, kPi);
    for (double a : {z.alpha, z.gamma, z.phi0}) {
      EXPECT_GE(a, 0.0);
      EXPECT_LT(a, kTwoPi);
    }
  }
}

TEST(Zyz, DiagonalInputsUseCanonicalSplit) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int t = 0; t < 200; ++t) {
    const ComplexMatrix u{{std::polar(1.0, angle(rng)), 0.0}, {0.0, std::polar(1.0, angle(rng))}};
    const ZyzAngles z = zyz_decompose(u);
    EXPECT_EQ(z.beta, 0.0);
    EXPECT_EQ(z.alpha, 0.0);
    EXPECT_LE(max_abs_diff(reconstruct(z), u), 1e-12);
  }
}

TEST(Zyz, AntiDiagonalInputsReconstruct) {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int t = 0; t < 200; ++t) {
    const ComplexMatrix u{{0.0, std::polar(1.0, angle(rng))}, {std::polar(1.0, angle(rng)), 0.0}};
    const ZyzAngles z = zyz_decompose(u);
    EXPECT_NEAR(z.beta, kPi, 1e-15);
    EXPECT_EQ(z.alpha, 0.0);
    EXPECT_LE(max_abs_diff(reconstruct(z), u), 1e-12);
  }
}

TEST(Zyz, DecomposeOfReconstructIsIdempotent) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 500; ++t) {
    const ZyzAngles a = zyz_decompose(haar_unitary(2, rng));
    const ZyzAngles b = zyz_decompose(reconstruct(a));
    EXPECT_LE(circular_distance(a.phi0, b.phi0), 1e-12);
    EXPECT_LE(circular_distance(a.alpha, b.alpha), 1e-12);
    EXPECT_LE(std::abs(a.beta - b.beta), 1e-12);
    EXPECT_LE(circular_distance(a.gamma, b.gamma), 1e-12);
  }
}

TEST(Zyz, NonUnitaryRejected) {
  EXPECT_THROW(zyz_decompose(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}), NonUnitaryError);
  EXPECT_THROW(zyz_decompose(ComplexMatrix::identity(4)), DimensionError);
}

}  // namespace
}  // namespace ncn
