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

#pragma once

#include <span>
#include <string>
#include <vector>

#include "ionc/circuit_dag.hpp"
#include "ionc/native.hpp"

namespace ionc {

inline constexpr int kDefaultQubitCap = 10;
inline constexpr double kCircuitTolerance = 1e-8;
inline constexpr double kRuleTolerance = 1e-10;

/// Left-multiplies `u` (2^n x 2^n) by the embedding of `g`.
void apply_gate(Matrix& u, const Gate& g);

/// Product of the gates in order, later gates on the left. Throws
/// `ErrorCode::Capacity` when n exceeds `cap`.
Matrix sequence_unitary(int n, std::span<const Gate> gates, int cap = kDefaultQubitCap);

/// Unitary of the circuit in execution order; the output permutation is not
/// applied.
Matrix circuit_unitary(const CircuitDag& c, int cap = kDefaultQubitCap);

/// P(perm): the basis state with bit k set maps to the one with bit perm[k]
/// set. Throws `ErrorCode::InvalidPermutation` for non-bijections.
Matrix permutation_matrix(std::span<const Qubit> perm);

/// min over unit c of ||A - c B||_F, with c estimated from tr(A B^dagger)
/// or, when the trace vanishes, from the largest entry of B.
double phase_distance(const Matrix& a, const Matrix& b);

/// ||A - c B||_F < tol * dim for some unit c.
bool equal_up_to_global_phase(const Matrix& a, const Matrix& b, double tol = kCircuitTolerance);

/// P(perm) B equals A up to global phase.
bool equal_up_to_permutation_and_phase(const Matrix& a, const Matrix& b, std::span<const Qubit> perm,
                                       double tol = kCircuitTolerance);

/// A = D B for a diagonal unitary D.
bool equal_up_to_diagonal(const Matrix& a, const Matrix& b, double tol = kCircuitTolerance);

struct RuleCheck {
  std::string rule;
  std::string sample;
  double error = 0.0;
  bool ok = false;
};

/// Oracle check of every sample of every catalog rule.
std::vector<RuleCheck> check_rules(double tol = kRuleTolerance);

}  // namespace ionc
