// Copyright 2026 The ionc Authors
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

#include "ionc/error.hpp"
#include "ionc/native.hpp"
#include "ionc/oracle.hpp"
#include "support/reference.hpp"

namespace ionc {
namespace {

using testing::all_kinds;
using testing::embed;
using testing::phase_gap;
using testing::random_gate;
using testing::reference_local;
using testing::reference_permutation;
using testing::reference_unitary;

double gap(const std::vector<Gate>& a, const std::vector<Gate>& b, int n) {
  return phase_gap(reference_unitary(n, a), reference_unitary(n, b));
}

TEST(GateMatrix, MatchesPauliExponentials) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 400; ++trial) {
    Gate g = random_gate(rng, 3, all_kinds());
    Matrix m = gate_matrix(g);
    Matrix r = reference_local(g);
    ASSERT_EQ(m.rows(), r.rows());
    EXPECT_LT((m - r).norm(), 1e-12) << g.to_string();
  }
}

TEST(GateMatrix, KnownValues) {
  const double s = 1 / std::sqrt(2.0);
  Matrix2 h = single_qubit_matrix(Gate(GateKind::H, {0}));
  EXPECT_NEAR(h(0, 0).real(), s, 1e-15);
  EXPECT_NEAR(h(1, 1).real(), -s, 1e-15);
  // R(pi, 0) = -i X
  Matrix2 r = single_qubit_matrix(Gate(GateKind::R, {0}, {1.0, 0.0}));
  EXPECT_NEAR(std::abs(r(0, 1) - std::complex<double>(0, -1)), 0.0, 1e-15);
  // ZZ(pi/2) = diag(e^{-i pi/4}, e^{i pi/4}, e^{i pi/4}, e^{-i pi/4})
  Matrix zz = gate_matrix(Gate(GateKind::ZZ, {0, 1}, {0.5}));
  EXPECT_NEAR(std::arg(zz(0, 0)), -std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(std::arg(zz(1, 1)), std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(std::arg(zz(3, 3)), -std::numbers::pi / 4, 1e-15);
}

TEST(GateSets, RestrictedPredicate) {
  EXPECT_TRUE(in_gate_set(GateSet::N, Gate(GateKind::R, {0}, {0.5, 0.37})));
  EXPECT_TRUE(in_gate_set(GateSet::N, Gate(GateKind::R, {0}, {1.0, 1.2})));
  EXPECT_FALSE(in_gate_set(GateSet::N, Gate(GateKind::R, {0}, {0.25, 0.0})));
  EXPECT_FALSE(in_gate_set(GateSet::N, Gate(GateKind::R, {0}, {1.5, 0.0})));
  EXPECT_TRUE(in_gate_set(GateSet::N, Gate(GateKind::Rz, {0}, {0.123})));
  EXPECT_TRUE(in_gate_set(GateSet::N, Gate(GateKind::ZZ, {0, 1}, {0.5})));
  EXPECT_FALSE(in_gate_set(GateSet::N, Gate(GateKind::ZZ, {0, 1}, {1.0})));
  EXPECT_TRUE(in_gate_set(GateSet::M, Gate(GateKind::ZZ, {0, 1}, {0.3})));
  EXPECT_FALSE(in_gate_set(GateSet::M, Gate(GateKind::CNOT, {0, 1})));
  EXPECT_FALSE(in_gate_set(GateSet::M, Gate(GateKind::H, {0})));
  EXPECT_TRUE(in_gate_set(GateSet::N, Gate(GateKind::Rx, {0}, {1.0})));
  EXPECT_FALSE(in_gate_set(GateSet::N, Gate(GateKind::Rx, {0}, {0.3})));
}

TEST(EulerAngles, ReconstructRandomUnitaries) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    Gate g(GateKind::TK1, {0}, {u(rng), trial % 10 == 0 ? 1.0 : u(rng), trial % 7 == 0 ? 0.0 : u(rng)});
    Matrix2 m = single_qubit_matrix(g);
    auto a = zxz_angles(m);
    ASSERT_TRUE(a.has_value());
    Gate back(GateKind::TK1, {0}, {a->alpha.half_turns(), a->beta.half_turns(), a->gamma.half_turns()});
    EXPECT_LT(phase_gap(reference_local(g), reference_local(back)), 1e-9) << g.to_string();
  }
  EXPECT_FALSE(zxz_angles(single_qubit_matrix(Gate(GateKind::Rz, {0}, {0.0}))).has_value());
  Matrix2 phase = Matrix2::Identity() * std::polar(1.0, 0.4);
  EXPECT_FALSE(zxz_angles(phase).has_value());
}

TEST(EulerAngles, GimbalLockPutsEverythingInAlpha) {
  auto a = zxz_angles(single_qubit_matrix(Gate(GateKind::Rz, {0}, {0.3})));
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(a->beta.is_zero());
  EXPECT_TRUE(a->gamma.is_zero());
  EXPECT_TRUE(a->alpha.near(0.3));
}

TEST(Rules, CnotTemplateShape) {
  auto seq = rules::cnot_to_zz(0, 1);
  ASSERT_EQ(seq.size(), 10u);
  int zz = 0;
  for (const Gate& g : seq) {
    if (g.kind == GateKind::ZZ) {
      ++zz;
      EXPECT_TRUE(g.p[0].near(0.5));
    }
  }
  EXPECT_EQ(zz, 1);
  EXPECT_LT(gap({Gate(GateKind::CNOT, {0, 1})}, seq, 2), 1e-10);
  EXPECT_LT(gap({Gate(GateKind::CNOT, {1, 0})}, rules::cnot_to_zz(1, 0), 2), 1e-10);
}

TEST(Rules, GenericZzUsesTwoHalfPiInteractions) {
  for (double th : {0.1, 0.77, 1.3, 1.9}) {
    auto seq = rules::zz_to_half_pi(0, 1, Angle(th));
    int zz = 0;
    for (const Gate& g : seq) zz += g.kind == GateKind::ZZ;
    EXPECT_EQ(zz, 2);
    EXPECT_LT(gap({Gate(GateKind::ZZ, {0, 1}, {th})}, seq, 2), 1e-10) << th;
  }
}

TEST(Rules, ControlledRyMacro) {
  for (double th : {1.0, 2.0, 3.0}) {
    auto seq = rules::cry_macro(0, 1, Angle(th, 4.0));
    ASSERT_EQ(seq.size(), 4u);
    EXPECT_LT(gap({Gate(GateKind::CRy, {0, 1}, {th})}, seq, 2), 1e-10) << th;
  }
}

TEST(Rules, RxRestriction) {
  EXPECT_TRUE(rules::rx_restriction(0, Angle(0.0)).empty());
  EXPECT_EQ(rules::rx_restriction(0, Angle(0.5)).size(), 1u);
  EXPECT_EQ(rules::rx_restriction(0, Angle(1.0)).size(), 1u);
  EXPECT_EQ(rules::rx_restriction(0, Angle(1.5)).size(), 2u);
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    double th = trial < 4 ? 0.5 * trial : u(rng);
    auto seq = rules::rx_restriction(0, Angle(th));
    EXPECT_LE(seq.size(), 5u);
    for (const Gate& g : seq) EXPECT_TRUE(in_gate_set(GateSet::N, g)) << g.to_string();
    EXPECT_LT(gap({Gate(GateKind::Rx, {0}, {th})}, seq, 1), 1e-10) << th;
  }
}

TEST(Rules, ZzRestriction) {
  EXPECT_EQ(rules::zz_restriction(0, 1, Angle(1.0))->size(), 2u);
  EXPECT_EQ(rules::zz_restriction(0, 1, Angle(1.5))->size(), 3u);
  EXPECT_EQ(rules::zz_restriction(0, 1, Angle(0.5))->size(), 1u);
  EXPECT_FALSE(rules::zz_restriction(0, 1, Angle(0.3)).has_value());
  EXPECT_LT(gap({Gate(GateKind::ZZ, {0, 1}, {1.5})}, *rules::zz_restriction(0, 1, Angle(1.5)), 2), 1e-10);
}

TEST(Rules, NetworksAndTk1) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Gate g = random_gate(rng, 3, all_kinds());
    if (g.single_qubit()) {
      auto seq = rules::to_tk1(g);
      ASSERT_LE(seq.size(), 1u);
      EXPECT_LT(gap({g}, seq, 3), 1e-10) << g.to_string();
      for (const Gate& t : seq) {
        EXPECT_LT(gap(seq, rules::tk1_expand(t.q[0], t.p[0], t.p[1], t.p[2]), 3), 1e-10);
      }
    } else if (auto net = rules::to_cnot_network(g)) {
      for (const Gate& h : *net) EXPECT_TRUE(h.single_qubit() || h.kind == GateKind::CNOT) << h.to_string();
      EXPECT_LT(gap({g}, *net, 3), 1e-10) << g.to_string();
    }
  }
}

TEST(Rules, CatalogPassesTheOracle) {
  auto results = check_rules();
  EXPECT_GE(results.size(), 14u);
  for (const RuleCheck& r : results) EXPECT_TRUE(r.ok) << r.rule << " " << r.sample << " err " << r.error;
  for (const DecompositionRule& rule : rule_catalog()) {
    EXPECT_FALSE(rule.samples.empty()) << rule.name;
    EXPECT_EQ(&find_rule(rule.name), &rule);
  }
  EXPECT_THROW(find_rule("no_such_rule"), Error);
}

TEST(Oracle, ApplyGateMatchesEmbedding) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    Gate g = random_gate(rng, 4, all_kinds());
    Matrix u = Matrix::Identity(16, 16);
    apply_gate(u, g);
    std::vector<Qubit> qs(g.qubits().begin(), g.qubits().end());
    EXPECT_LT((u - embed(reference_local(g), qs, 4)).norm(), 1e-12) << g.to_string();
  }
}

TEST(Oracle, SequenceUnitaryMatchesReference) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    CircuitDag c = testing::random_circuit(rng, 4, 30);
    EXPECT_LT((circuit_unitary(c) - reference_unitary(4, c.gates())).norm(), 1e-10);
  }
}

TEST(Oracle, CapacityIsEnforced) {
  CircuitDag c(11);
  try {
    circuit_unitary(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Capacity);
  }
  EXPECT_NO_THROW(circuit_unitary(c, 11));
}

TEST(Oracle, PermutationMatrix) {
  std::vector<Qubit> perm{2, 0, 1};
  EXPECT_LT((permutation_matrix(perm) - reference_permutation(perm)).norm(), 1e-15);
  std::vector<Qubit> bad{0, 0, 1};
  EXPECT_THROW(permutation_matrix(bad), Error);
}

TEST(Oracle, EqualityUpToPhaseAndPermutation) {
  std::mt19937 rng(12);
  CircuitDag c = testing::random_circuit(rng, 3, 20);
  Matrix a = circuit_unitary(c);
  Matrix b = a * std::polar(1.0, 1.1);
  EXPECT_TRUE(equal_up_to_global_phase(a, b));
  EXPECT_LT(phase_distance(a, b), 1e-12);
  Matrix d = Matrix::Identity(8, 8);
  d(3, 3) = -1;
  EXPECT_FALSE(equal_up_to_global_phase(a, d * a));
  EXPECT_TRUE(equal_up_to_diagonal(d * a, a));
  std::vector<Qubit> perm{1, 2, 0};
  EXPECT_TRUE(equal_up_to_permutation_and_phase(permutation_matrix(perm) * a, a, perm));
  EXPECT_FALSE(equal_up_to_permutation_and_phase(a, a, perm));
  // A matrix with vanishing overlap trace still gets a phase estimate.
  Matrix x = gate_matrix(Gate(GateKind::X, {0}));
  EXPECT_GT(phase_distance(x, Matrix::Identity(2, 2)), 1.0);
}

}  // namespace
}  // namespace ionc
