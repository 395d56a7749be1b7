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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ionc/gate.hpp"

namespace ionc {

using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

/// Local unitary of a gate kind; qubit 0 of the gate is the least
/// significant bit of the basis index.
Matrix gate_matrix(GateKind kind, std::span<const Angle> params);
Matrix gate_matrix(const Gate& g);

/// 2x2 matrix of a single-qubit gate.
Matrix2 single_qubit_matrix(const Gate& g);

enum class GateSet { M, N };

/// Membership in the native set M = {R, Rz, ZZ} with free angles, or in the
/// restricted set N (R with theta in {pi/2, pi}, Rz free, ZZ(pi/2)). Rx and
/// Ry count as R with phase 0 and pi/2.
bool in_gate_set(GateSet set, const Gate& g, double eps = kAngleEps);

struct Tk1Angles {
  Angle alpha;
  Angle beta;
  Angle gamma;
};

/// ZXZ Euler angles with U = phase * Rz(alpha) Rx(beta) Rz(gamma). Returns
/// nullopt when U is the identity up to phase. At beta = 0 or pi the gamma
/// component is zero.
std::optional<Tk1Angles> zxz_angles(const Matrix2& u);

namespace rules {

/// Circuit order (first element acts first) for every template below.

/// CNOT_{i,j} with one ZZ(pi/2).
std::vector<Gate> cnot_to_zz(Qubit i, Qubit j);

/// ZZ_{i,j}(theta) with two ZZ(pi/2).
std::vector<Gate> zz_to_half_pi(Qubit i, Qubit j, Angle theta);

/// CRy_{i,j}(theta) with one ZZ(theta/2).
std::vector<Gate> cry_macro(Qubit i, Qubit j, Angle theta);

/// TK1(alpha, beta, gamma) as Rz(gamma), Rx(beta), Rz(alpha); zero angles
/// are dropped.
std::vector<Gate> tk1_expand(Qubit q, Angle alpha, Angle beta, Angle gamma);

/// Rx(theta) with pulse areas in {pi/2, pi}.
std::vector<Gate> rx_restriction(Qubit q, Angle theta);

/// ZZ(pi) and ZZ(3pi/2) as repeated ZZ(pi/2); other angles return nullopt.
std::optional<std::vector<Gate>> zz_restriction(Qubit i, Qubit j, Angle theta);

/// Two- and three-qubit gates other than ZZ and CNOT as single-qubit gates and
/// CNOTs: CZ, CU1, CRy, SWAP, CCX. Returns nullopt for other kinds.
std::optional<std::vector<Gate>> to_cnot_network(const Gate& g);

/// Any single-qubit gate as one TK1, or nothing if it is the identity.
std::vector<Gate> to_tk1(const Gate& g);

/// The standard 15-gate H/T/CNOT Toffoli network on controls a, b and target c.
std::vector<Gate> toffoli_network(Qubit a, Qubit b, Qubit c);

}  // namespace rules

/**
 * A named rewrite `lhs -> rhs`. `matches` decides applicability, `rhs`
 * instantiates the replacement on the matched gate's qubits, and `samples`
 * lists gates that exercise the identity for the oracle check.
 */
struct DecompositionRule {
  std::string name;
  std::function<bool(const Gate&)> matches;
  std::function<std::vector<Gate>(const Gate&)> rhs;
  std::vector<Gate> samples;
};

const std::vector<DecompositionRule>& rule_catalog();
const DecompositionRule& find_rule(std::string_view name);
std::optional<std::vector<Gate>> apply_rule(const DecompositionRule& rule, const Gate& g);

}  // namespace ionc
