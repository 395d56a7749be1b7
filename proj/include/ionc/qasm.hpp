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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ionc/circuit_dag.hpp"
#include "ionc/native.hpp"

namespace ionc::qasm {

struct Position {
  int line = 1;
  int column = 1;
};

/// Parameter expression. Leaves are numbers, `pi` or formal parameters.
struct Expr {
  enum class Op { Number, Pi, Param, Neg, Add, Sub, Mul, Div, Pow, Call };
  Op op = Op::Number;
  double value = 0.0;
  std::string name;  // parameter or function name
  std::vector<std::shared_ptr<const Expr>> args;
  Position pos;
};

using ExprPtr = std::shared_ptr<const Expr>;

struct Argument {
  std::string reg;
  std::optional<int> index;
  Position pos;
};

struct GateCall {
  std::string name;
  std::vector<ExprPtr> params;
  std::vector<Argument> args;
  Position pos;
};

struct Measure {
  Argument qubit;
  Argument bit;
  Position pos;
};

struct Barrier {
  std::vector<Argument> args;
  Position pos;
};

using Statement = std::variant<GateCall, Measure, Barrier>;

struct GateDef {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> qubits;
  std::vector<GateCall> body;
  Position pos;
};

struct Register {
  std::string name;
  int size = 0;
  Position pos;
};

struct Program {
  std::string version;
  std::vector<Register> qregs;
  std::vector<Register> cregs;
  std::vector<GateDef> gates;
  std::vector<Statement> statements;
};

/// Parses OpenQASM 2.0. Throws `ParseError` with code `Parse` for lexical and
/// syntax errors and `UnsupportedFeature` for `if`, `opaque`, `reset` and
/// includes other than qelib1.inc.
Program parse(std::string_view text);

struct LowerOptions {
  /// Drop declared qubits that no gate touches and renumber the rest.
  bool drop_idle_qubits = true;
};

struct Lowered {
  CircuitDag dag;
  int measures_stripped = 0;
  int barriers_stripped = 0;
  /// Flattened declared index -> circuit qubit, or -1 when dropped.
  std::vector<Qubit> qubit_map;
};

/// Lowers to the circuit IR: qelib1 gates map to gate kinds, ccx expands to
/// the 15-gate network, user gates are inlined, measure and barrier are
/// stripped. Throws `ParseError` with `UnsupportedGate` for unknown gates.
Lowered lower(const Program& p, const LowerOptions& opts = {});

/// parse + lower.
Lowered load(std::string_view text, const LowerOptions& opts = {});
Lowered load_file(const std::string& path, const LowerOptions& opts = {});

/// Names of the built-in gates accepted without a definition.
const std::vector<std::string>& builtin_gates();

/// Arity and parameter count of a built-in gate.
std::optional<std::pair<int, int>> builtin_signature(std::string_view name);

/// Lowering of one built-in gate application; parameters in radians.
std::vector<Gate> lower_builtin(std::string_view name, std::span<const double> params,
                                std::span<const Qubit> qubits);

/// Matrix of a built-in gate from its qelib1 definition (first qubit is the
/// least significant bit); parameters in radians.
Matrix qelib_matrix(std::string_view name, std::span<const double> params);

}  // namespace ionc::qasm
