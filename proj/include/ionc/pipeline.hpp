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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ionc/circuit_dag.hpp"
#include "ionc/ion.hpp"
#include "ionc/oracle.hpp"
#include "ionc/passes.hpp"

namespace ionc {

struct CompileOptions {
  bool verify = false;
  int verify_qubit_cap = kDefaultQubitCap;
  /// Skip verification of inputs with more gates than this; 0 means no limit.
  std::size_t verify_max_gates = 0;
  bool drop_terminal_rz = false;
  /// Pass names run instead of the default flow; see `pipeline_passes()`.
  std::optional<std::vector<std::string>> pass_override;
  std::vector<Macro> macros{Macro::CRy};
  bool phase_tracking = true;
  bool block_aggregation = true;
};

struct GateCounts {
  std::size_t single_qubit = 0;
  std::size_t two_qubit = 0;
  std::size_t terminal_rz = 0;

  std::size_t total() const { return single_qubit + two_qubit; }
};

/// Counts gates by arity (three-qubit gates count as two-qubit). A terminal Rz
/// is an Rz directly before its wire's output; it is excluded from
/// `single_qubit` unless `include_terminal_rz` is set.
GateCounts count_gates(const CircuitDag& c, bool include_terminal_rz = true);

/// Every gate is in the restricted native set.
bool in_restricted_set(const CircuitDag& c);

struct StageSnapshot {
  std::string stage;
  std::size_t single_qubit = 0;
  std::size_t two_qubit = 0;
  std::size_t zz = 0;
  double elapsed_ms = 0.0;
};

struct BoundCheck {
  std::string stage;
  std::size_t single_qubit = 0;
  std::size_t limit = 0;
  bool ok = false;
};

enum class Verdict { NotRun, Passed, Failed, Skipped };

std::string to_string(Verdict v);

struct CompileReport {
  int n = 0;
  std::vector<StageSnapshot> stages;
  /// ZZ count before ZZ angle restriction.
  std::size_t omega = 0;
  std::vector<BoundCheck> bounds;
  Verdict verification = Verdict::NotRun;
  double verification_error = 0.0;
  std::vector<Qubit> permutation;
  std::size_t measures_stripped = 0;
  std::size_t barriers_stripped = 0;
  GateCounts original;
  GateCounts compiled;
  double compile_ms = 0.0;
  Schedule schedule;

  bool bounds_ok() const;
};

struct Compilation {
  CircuitDag circuit{1};
  CompileReport report;
};

/// Names accepted in `CompileOptions::pass_override`.
const std::vector<std::string>& pipeline_passes();

/// The default flow, as pass names.
std::vector<std::string> default_flow(const CompileOptions& opts = {});

/// Runs the pass flow on a copy of `c`. Pass errors are rethrown with the
/// stage name prefixed; a failed verification throws
/// `ErrorCode::Verification`.
Compilation compile(const CircuitDag& c, const CompileOptions& opts = {});

/// SWAP elimination and per-gate rebasing and restriction with no
/// optimization; `remove_trivial` adds one remove_redundancies round.
Compilation compile_naive(const CircuitDag& c, bool remove_trivial = false, const CompileOptions& opts = {});

/// Circuit JSON with "schedule" and "report" members added.
std::string compilation_to_json(const Compilation& comp, int indent = 2);

std::string report_to_json(const CompileReport& r, int indent = 2);

struct BenchmarkRow {
  std::string name;
  int qubits = 0;
  GateCounts original;
  GateCounts compiled;
  GateCounts naive;
  double reduction = 0.0;
  double compile_ms = 0.0;
  double ms_per_gate = 0.0;
  Verdict verification = Verdict::NotRun;
  std::string error;

  bool failed() const { return !error.empty(); }
};

/// Compiles every .qasm file in `dir` (sorted by name) with both flows.
/// Unreadable files yield rows with `error` set. `jobs` > 1 compiles in
/// parallel threads.
std::vector<BenchmarkRow> run_benchmark(const std::filesystem::path& dir, const CompileOptions& opts = {},
                                        int jobs = 1);

void write_csv(std::ostream& os, const std::vector<BenchmarkRow>& rows);

}  // namespace ionc
