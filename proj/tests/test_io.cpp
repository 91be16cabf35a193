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
#include <string>

#include "ncn/grover.hpp"
#include "ncn/io.hpp"
#include "ncn/random.hpp"

namespace ncn {
namespace {

TEST(Ncnv1, ParsesTwoGateNcnCircuit) {
  const Circuit c = io::parse_circuit("ncnv1 2 NCN\nNEG 0 3.141592653589793\nCSQN 0 1\n");
  EXPECT_EQ(c.width(), 2u);
  EXPECT_EQ(c.dialect(), Dialect::kNcn);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates()[0].kind(), GateKind::kNegator);
  EXPECT_NEAR(c.gates()[0].angle(), kPi, 1e-15);
  EXPECT_EQ(c.gates()[1], Gate::c_sqrt_not(0, 1));
}

TEST(Ncnv1, CommentsBlankLinesAndAncilla) {
  const Circuit c = io::parse_circuit(
      "# header comment\n\nncnv1 3 GENERAL ancilla=0  # trailing\nH 0\n  # indented\nTOF 0 1 2\n");
  EXPECT_EQ(c.ancilla(), Qubit{0});
  EXPECT_EQ(c.size(), 2u);
}

TEST(Ncnv1, DuplicateQubitIsArityError) {
  EXPECT_THROW(io::parse_circuit("ncnv1 2 NCN\nCSQN 0 0\n"), ArityError);
}

TEST(Ncnv1, WrongOperandCountIsArityError) {
  EXPECT_THROW(io::parse_circuit("ncnv1 2 GENERAL\nCNOT 0\n"), ArityError);
}

TEST(Ncnv1, WireOutsideRegisterIsArityError) {
  EXPECT_THROW(io::parse_circuit("ncnv1 2 GENERAL\nH 2\n"), ArityError);
}

TEST(Ncnv1, NcnHeaderRejectsForeignGates) {
  try {
    io::parse_circuit("ncnv1 2 NCN\nNEG 0 1\nH 1\n");
    FAIL();
  } catch (const DialectError &e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Ncnv1, SyntaxErrorsCarryLineNumbers) {
  try {
    io::parse_circuit("ncnv1 1 GENERAL\nRZ 0 0.5\nRZ 0 abc\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    io::parse_circuit("ncnv1 1 GENERAL\nFOO 0\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(io::parse_circuit("ncnv2 1 GENERAL\n"), ParseError);
  EXPECT_THROW(io::parse_circuit("ncnv1 1 WEIRD\n"), ParseError);
  EXPECT_THROW(io::parse_circuit(""), ParseError);
}

TEST(Ncnv1, NonUnitaryPayloadRejected) {
  EXPECT_THROW(io::parse_circuit("ncnv1 1 GENERAL\nU1Q 0 1 0 1 0 0 0 1 0\n"),
               NonUnitaryError);
}

TEST(Ncnv1, RandomCircuitsRoundTrip) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Circuit c = random_circuit(4, 30, rng);
    const Circuit back = io::parse_circuit(io::serialize_circuit(c));
    ASSERT_EQ(back.size(), c.size());
    EXPECT_EQ(back.width(), c.width());
    EXPECT_EQ(back.dialect(), c.dialect());
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_TRUE(approx_equal(back.gates()[i], c.gates()[i], 1e-15)) << i;
    }
  }
}

TEST(Ncnv1, AnglesPrintedWithAtLeastFifteenDigits) {
  Circuit c(1, Dialect::kNcn);
  c.append(Gate::negator(0, 1.0 / 3.0));
  const std::string text = io::serialize_circuit(c);
  EXPECT_NE(text.find("0.333333333333333"), std::string::npos);
}

TEST(Ncnv1, GroverNcnOutputRoundTrips) {
  const GroverRun run = run_grover(1, 0, 1);
  const Circuit back = io::parse_circuit(io::serialize_circuit(run.ncn));
  EXPECT_EQ(back, run.ncn);
}

TEST(Matv1, ParsesComplexEntries) {
  const ComplexMatrix m = io::parse_matrix("matv1 2\n0.5-0.5j 0.5+0.5j\n1 -2j\n");
  EXPECT_EQ(m(0, 0), Complex(0.5, -0.5));
  EXPECT_EQ(m(0, 1), Complex(0.5, 0.5));
  EXPECT_EQ(m(1, 0), Complex(1.0, 0.0));
  EXPECT_EQ(m(1, 1), Complex(0.0, -2.0));
}

TEST(Matv1, ExponentsAndSignsParse) {
  const ComplexMatrix m = io::parse_matrix("matv1 1\n-1.5e-3+2E+2j\n");
  EXPECT_EQ(m(0, 0), Complex(-1.5e-3, 200.0));
  EXPECT_EQ(io::parse_complex("+1-1e-17j"), Complex(1.0, -1e-17));
}

TEST(Matv1, SeventeenDigitsRoundTripExactly) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix u = haar_unitary(8, rng);
    EXPECT_EQ(io::parse_matrix(io::serialize_matrix(u)), u);
  }
}

TEST(Matv1, MalformedInputsRejected) {
  EXPECT_THROW(io::parse_matrix("matv1 2\n1 0\n"), ParseError);
  EXPECT_THROW(io::parse_matrix("matv1 2\n1 0 0\n0 1\n"), ParseError);
  EXPECT_THROW(io::parse_matrix("matv1 1\n1+xj\n"), ParseError);
  EXPECT_THROW(io::parse_matrix("matv2 1\n1\n"), ParseError);
}

TEST(Svec1, RoundTrip) {
  std::mt19937_64 rng(33);
  const StateVector s = random_state(8, rng);
  const StateVector back = io::parse_state(io::serialize_state(s));
  for (std::size_t i = 0; i < s.dim(); ++i) EXPECT_EQ(back[i], s[i]);
}

TEST(Svec1, ParsesRealImagPairs) {
  const StateVector s = io::parse_state("svec1 2\n0.6 0\n0 0.8\n");
  EXPECT_EQ(s[1], Complex(0.0, 0.8));
  EXPECT_THROW(io::parse_state("svec1 2\n1 0\n"), ParseError);
}

TEST(Report, BitStringsPutQubitZeroFirst) {
  EXPECT_EQ(io::bit_string(1, 3), "001");
  EXPECT_EQ(io::bit_string(6, 3), "110");
  const std::vector<double> p{0.25, 0.75};
  EXPECT_EQ(io::format_probabilities(p, 1), "0 0.25\n1 0.75\n");
}

}  // namespace
}  // namespace ncn
