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

#include <cmath>
#include <random>

#include "ncn/circuit.hpp"
#include "ncn/linalg.hpp"
#include "ncn/matrices.hpp"
#include "ncn/random.hpp"

namespace ncn {
namespace {

const Complex kI{0.0, 1.0};

TEST(Matmul, IdentityTimesIdentity) {
  EXPECT_EQ(matmul(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
            ComplexMatrix::identity(2));
}

TEST(Matmul, TwoQuarterNegatorsMakeNot) {
  const auto m = matmul(mat::negator(kPi / 2), mat::negator(kPi / 2));
  EXPECT_LE(max_abs_diff(m, mat::negator(kPi)), 1e-15);
  EXPECT_LE(max_abs_diff(m, mat::pauli_x()), 1e-15);
}

TEST(Matmul, XTimesHByHand) {
  const double h = 1.0 / std::sqrt(2.0);
  // Rows of X pick rows of H in swapped order.
  const ComplexMatrix expected{{h, -h}, {h, h}};
  EXPECT_LE(max_abs_diff(matmul(mat::pauli_x(), mat::hadamard()), expected), 1e-16);
}

TEST(Matmul, DimensionMismatchThrows) {
  EXPECT_THROW(matmul(ComplexMatrix::identity(2), ComplexMatrix::identity(4)),
               DimensionError);
}

TEST(Kron, IdentityBlocks) {
  EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
            ComplexMatrix::identity(4));
}

TEST(Kron, HadamardTensorIdentityHasSignedIdentityBlocks) {
  const auto m = kron(mat::hadamard(), ComplexMatrix::identity(2));
  const double h = 1.0 / std::sqrt(2.0);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const double block_sign = (r >= 2 && c >= 2) ? -1.0 : 1.0;
      const double expected = (r % 2 == c % 2) ? block_sign * h : 0.0;
      EXPECT_EQ(m(r, c), Complex(expected)) << r << "," << c;
    }
}

TEST(Kron, ProjectorTensorXPutsXInLowerRightBlock) {
  const ComplexMatrix p1{{0.0, 0.0}, {0.0, 1.0}};
  const ComplexMatrix expected{{0.0, 0.0, 0.0, 0.0},
                               {0.0, 0.0, 0.0, 0.0},
                               {0.0, 0.0, 0.0, 1.0},
                               {0.0, 0.0, 1.0, 0.0}};
  EXPECT_EQ(kron(p1, mat::pauli_x()), expected);
}

TEST(Kron, Associative) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto a = haar_unitary(2, rng), b = haar_unitary(2, rng), c = haar_unitary(2, rng);
    const auto l = kron(kron(a, b), c), r = kron(a, kron(b, c));
    // Entries are triple products; the two groupings round differently.
    EXPECT_LE(max_abs_diff(l, r), 1e-15);
  }
}

TEST(PhaseDistance, SameMatrixIsZero) {
  EXPECT_LE(phase_invariant_distance(mat::hadamard(), mat::hadamard()), 1e-15);
}

TEST(PhaseDistance, HadamardVersusMinusIHadamardIsZero) {
  EXPECT_LE(phase_invariant_distance(mat::hadamard(), scale(-kI, mat::hadamard())), 1e-15);
}

TEST(PhaseDistance, IdentityVersusXIsTwo) {
  EXPECT_NEAR(phase_invariant_distance(ComplexMatrix::identity(2), mat::pauli_x()), 2.0,
              1e-15);
}

TEST(PhaseDistance, MatchesTraceFormula) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto a = haar_unitary(4, rng), b = haar_unitary(4, rng);
    const double tr = std::abs(trace(matmul(adjoint(a), b)));
    const double formula = std::sqrt(std::max(0.0, 8.0 - 2.0 * tr));
    EXPECT_NEAR(phase_invariant_distance(a, b), formula, 1e-12);
  }
}

TEST(PhaseDistance, ZeroExactlyWhenPhaseAlignedEntriesAgree) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (int t = 0; t < 200; ++t) {
    const auto a = haar_unitary(4, rng);
    const auto b = scale(std::polar(1.0, phase(rng)), a);
    const Complex w = std::polar(1.0, std::arg(trace(matmul(adjoint(b), a))));
    EXPECT_LE(phase_invariant_distance(a, b), 1e-12);
    EXPECT_LE(max_abs_diff(a, scale(w, b)), 1e-9);

    const auto c = haar_unitary(4, rng);
    const Complex wc = std::polar(1.0, std::arg(trace(matmul(adjoint(c), a))));
    EXPECT_GT(phase_invariant_distance(a, c), 1e-6);
    EXPECT_GT(max_abs_diff(a, scale(wc, c)), 1e-9);
  }
}

TEST(PhaseDistance, DimensionMismatchThrows) {
  EXPECT_THROW(phase_invariant_distance(ComplexMatrix::identity(2), ComplexMatrix::identity(4)),
               DimensionError);
}

TEST(IsXu, NegatorsAreXu) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int t = 0; t < 100; ++t) EXPECT_TRUE(is_xu(mat::negator(angle(rng)), 1e-12));
}

TEST(IsXu, ControlledSqrtNotIsXu) {
  EXPECT_TRUE(is_xu(mat::controlled(mat::sqrt_not()), 1e-15));
}

TEST(IsXu, HadamardIsNot) { EXPECT_FALSE(is_xu(mat::hadamard(), 1e-9)); }

TEST(IsXu, ClosedUnderProductsOfNcnCircuits) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 30; ++t) {
    const auto a = circuit_matrix(random_circuit(3, 25, rng, Dialect::kNcn));
    const auto b = circuit_matrix(random_circuit(3, 25, rng, Dialect::kNcn));
    ASSERT_TRUE(is_xu(a, 1e-10));
    ASSERT_TRUE(is_xu(b, 1e-10));
    EXPECT_TRUE(is_xu(matmul(a, b), 1e-10));
  }
}

TEST(ComplexMatrixValue, RejectsNonFiniteEntries) {
  EXPECT_THROW(ComplexMatrix(2, {1.0, 0.0, std::nan(""), 1.0}), Error);
  EXPECT_THROW(ComplexMatrix(2, {1.0, 0.0, INFINITY, 1.0}), Error);
}

TEST(ComplexMatrixValue, RejectsWrongEntryCount) {
  EXPECT_THROW(ComplexMatrix(2, {1.0, 0.0, 0.0}), DimensionError);
}

TEST(ComplexMatrixValue, RespectsDimensionCap) {
  const std::size_t old = max_matrix_dim();
  set_max_matrix_dim(8);
  EXPECT_THROW(ComplexMatrix::identity(16), DimensionError);
  EXPECT_NO_THROW(ComplexMatrix::identity(8));
  set_max_matrix_dim(old);
}

TEST(Unitarity, GateConstructorsAreUnitaryToConstructionTolerance) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int t = 0; t < 200; ++t) {
    const double a = angle(rng);
    EXPECT_LE(unitarity_deviation(mat::negator(a)), 1e-12);
    EXPECT_LE(unitarity_deviation(mat::rz(a)), 1e-12);
    EXPECT_LE(unitarity_deviation(mat::ry(a)), 1e-12);
  }
  EXPECT_LE(unitarity_deviation(mat::hadamard()), 1e-12);
  EXPECT_LE(unitarity_deviation(mat::sqrt_not()), 1e-12);
}

TEST(Unitarity, RequireUnitaryReportsDeviation) {
  const ComplexMatrix m{{1.0, 1.0}, {0.0, 1.0}};
  try {
    require_unitary(m, 1e-10, "test");
    FAIL();
  } catch (const NonUnitaryError &e) {
    EXPECT_NEAR(e.deviation(), 1.0, 1e-15);
  }
}

TEST(StateVectorValue, NormAndBasis) {
  const auto s = StateVector::basis(4, 2);
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_EQ(s[2], Complex(1.0));
  EXPECT_TRUE(s.is_normalized());
  EXPECT_THROW(StateVector::basis(4, 4), DimensionError);
  EXPECT_NEAR(StateVector({3.0, 4.0}).normalized()[1].real(), 0.8, 1e-16);
}

TEST(StateVectorValue, FidelityDeficitIgnoresPhase) {
  std::mt19937_64 rng(17);
  const auto s = random_state(8, rng);
  std::vector<Complex> rotated(s.amplitudes().begin(), s.amplitudes().end());
  for (auto &z : rotated) z *= std::polar(1.0, 0.3);
  EXPECT_LE(fidelity_deficit(s, StateVector(rotated)), 1e-15);
}

TEST(QubitCount, PowersOfTwoOnly) {
  EXPECT_EQ(qubit_count_for_dim(1), 0u);
  EXPECT_EQ(qubit_count_for_dim(8), 3u);
  EXPECT_THROW(qubit_count_for_dim(6), DimensionError);
  EXPECT_THROW(qubit_count_for_dim(0), DimensionError);
}

}  // namespace
}  // namespace ncn
