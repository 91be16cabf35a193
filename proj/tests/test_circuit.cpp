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

#include "ncn/circuit.hpp"
#include "ncn/linalg.hpp"
#include "ncn/matrices.hpp"
#include "ncn/random.hpp"

namespace ncn {
namespace {

TEST(GateMatrix, HalfTurnNegatorIsNot) {
  const ComplexMatrix expected{{0.0, 1.0}, {1.0, 0.0}};
  EXPECT_LE(max_abs_diff(gate_matrix(Gate::negator(0, kPi), 1), expected), 1e-16);
}

TEST(GateMatrix, ControlledSqrtNotMatchesDisplayedMatrix) {
  const Complex p{0.5, 0.5}, m{0.5, -0.5};
  const ComplexMatrix expected{{1.0, 0.0, 0.0, 0.0},
                               {0.0, 1.0, 0.0, 0.0},
                               {0.0, 0.0, p, m},
                               {0.0, 0.0, m, p}};
  EXPECT_EQ(gate_matrix(Gate::c_sqrt_not(0, 1), 2), expected);
}

TEST(GateMatrix, NegatorOnLowWireIsIdentityKronNegator) {
  const auto m = gate_matrix(Gate::negator(1, kPi / 2), 2);
  EXPECT_LE(max_abs_diff(m, kron(ComplexMatrix::identity(2), mat::negator(kPi / 2))), 1e-16);
}

TEST(GateMatrix, ReversedControlFlipsOrientation) {
  // CNOT with control q1, target q0 maps |01> to |11>.
  const auto m = gate_matrix(Gate::cnot(1, 0), 2);
  EXPECT_EQ(m(3, 1), Complex(1.0));
  EXPECT_EQ(m(1, 1), Complex(0.0));
}

TEST(GateMatrix, ToffoliPermutesLastTwoStates) {
  const auto m = gate_matrix(Gate::toffoli(0, 1, 2), 3);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(m(i, i), Complex(1.0));
  EXPECT_EQ(m(6, 7), Complex(1.0));
  EXPECT_EQ(m(7, 6), Complex(1.0));
}

TEST(GateMatrix, OutOfRangeWireThrows) {
  EXPECT_THROW(gate_matrix(Gate::cnot(0, 2), 2), ArityError);
}

TEST(GateMatrix, EveryKindUnitaryAtAllAngles) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (GateKind k : kAllGateKinds) {
    for (int t = 0; t < 25; ++t) {
      std::vector<Qubit> qs;
      for (std::size_t i = 0; i < arity_of(k); ++i) qs.push_back(2 - i);
      Gate::Payload payload{};
      if (has_payload(k)) {
        const auto u = haar_unitary(2, rng);
        payload = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
      }
      const Gate g = Gate::make(k, qs, angle(rng), payload);
      EXPECT_LE(unitarity_deviation(gate_matrix(g, 3)), 1e-12) << mnemonic(k);
    }
  }
}

TEST(CircuitMatrix, EmptyIsIdentity) {
  EXPECT_EQ(circuit_matrix(Circuit(2)), ComplexMatrix::identity(4));
}

TEST(CircuitMatrix, TwoControlledSqrtNotsMakeCnot) {
  Circuit c(2, Dialect::kNcn);
  c.append(Gate::c_sqrt_not(0, 1));
  c.append(Gate::c_sqrt_not(0, 1));
  EXPECT_LE(max_abs_diff(circuit_matrix(c), gate_matrix(Gate::cnot(0, 1), 2)), 1e-16);
}

TEST(CircuitMatrix, NegatorAnglesAdd) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int t = 0; t < 50; ++t) {
    const double a = angle(rng), b = angle(rng);
    Circuit c(1, Dialect::kNcn);
    c.append(Gate::negator(0, a));
    c.append(Gate::negator(0, b));
    EXPECT_LE(max_abs_diff(circuit_matrix(c), mat::negator(a + b)), 1e-12);
  }
}

TEST(CircuitMatrix, LaterGatesMultiplyOnTheLeft) {
  Circuit c(1);
  c.append(Gate::hadamard(0));
  c.append(Gate::rz(0, 0.4));
  EXPECT_LE(max_abs_diff(circuit_matrix(c), matmul(mat::rz(0.4), mat::hadamard())), 1e-15);
}

TEST(CircuitMatrix, NcnCircuitsStayInXu) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    EXPECT_TRUE(is_xu(circuit_matrix(random_circuit(3, 40, rng, Dialect::kNcn)), 1e-9));
  }
}

TEST(CircuitMatrix, ConcatenationComposes) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 40; ++t) {
    const auto c1 = random_circuit(3, 12, rng), c2 = random_circuit(3, 12, rng);
    EXPECT_LE(max_abs_diff(circuit_matrix(concat(c1, c2)),
                           matmul(circuit_matrix(c2), circuit_matrix(c1))),
              1e-10);
  }
}

TEST(GateValue, AnglesNormalizedIntoOneTurn) {
  EXPECT_NEAR(Gate::negator(0, -kPi / 2).angle(), 3 * kPi / 2, 1e-15);
  EXPECT_NEAR(Gate::rz(0, 5 * kPi).angle(), kPi, 1e-14);
  EXPECT_EQ(Gate::cnot(0, 1).angle(), 0.0);
  const double a = Gate::negator(0, kTwoPi).angle();
  EXPECT_TRUE(a >= 0.0 && a < kTwoPi);
}

TEST(GateValue, RepeatedWireIsArityError) {
  EXPECT_THROW(Gate::c_sqrt_not(0, 0), ArityError);
  EXPECT_THROW(Gate::toffoli(0, 1, 0), ArityError);
}

TEST(GateValue, NonUnitaryPayloadRejected) {
  EXPECT_THROW(Gate::generic_1q(0, ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}), NonUnitaryError);
  EXPECT_THROW(Gate::generic_1q(0, ComplexMatrix{{1.0 + 1e-9, 0.0}, {0.0, 1.0}}),
               NonUnitaryError);
}

TEST(GateValue, NonFiniteAngleRejected) {
  EXPECT_THROW(Gate::negator(0, std::nan("")), Error);
}

TEST(GateValue, MakeChecksArity) {
  const std::vector<Qubit> one{0};
  EXPECT_THROW(Gate::make(GateKind::kCnot, one), ArityError);
}

TEST(CircuitValue, NcnDialectRejectsOtherKinds) {
  Circuit c(2, Dialect::kNcn);
  EXPECT_THROW(c.append(Gate::hadamard(0)), DialectError);
  EXPECT_THROW(c.append(Gate::cnot(0, 1)), DialectError);
  EXPECT_NO_THROW(c.append(Gate::negator(0, 1.0)));
  EXPECT_NO_THROW(c.append(Gate::c_sqrt_not(1, 0)));
}

TEST(CircuitValue, WireOutsideRegisterRejected) {
  Circuit c(2);
  EXPECT_THROW(c.append(Gate::hadamard(2)), ArityError);
}

TEST(CircuitValue, AncillaMustBeInsideRegister) {
  EXPECT_THROW(Circuit(2, Dialect::kNcn, Qubit{2}), ArityError);
  EXPECT_EQ(Circuit(2, Dialect::kNcn, Qubit{0}).ancilla(), Qubit{0});
}

TEST(CircuitValue, RequireNcnFlagsForeignKinds) {
  const std::vector<Gate> gs{Gate::negator(0, 1.0), Gate::cnot(0, 1)};
  EXPECT_THROW(require_ncn(gs), DialectError);
}

TEST(CircuitValue, CountKind) {
  std::mt19937_64 rng(25);
  const auto c = random_circuit(3, 60, rng);
  std::size_t total = 0;
  for (GateKind k : kAllGateKinds) total += count_kind(c.gates(), k);
  EXPECT_EQ(total, c.size());
}

}  // namespace
}  // namespace ncn
