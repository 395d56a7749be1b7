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

// Command-line driver over the C API.
//
//   ionc compile <in.qasm> -o <out.json> [--verify] [--drop-terminal-rz]
//                [--naive] [--report <r.json>]
//   ionc bench <dir> --csv <out.csv> [--jobs N] [--verify-cap 10]
//   ionc check-rules
//
// Exit codes: 0 ok, 1 usage or other failure, 2 parse error, 3 verification
// failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ionc/ionc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerification = 3;

int exit_code(ionc_status s) {
  switch (s) {
    case IONC_OK: return kExitOk;
    case IONC_ERR_PARSE:
    case IONC_ERR_UNSUPPORTED: return kExitParse;
    case IONC_ERR_VERIFICATION: return kExitVerification;
    default: return kExitUsage;
  }
}

int fail(ionc_status s) {
  std::cerr << "ionc: " << ionc_status_string(s) << ": " << ionc_last_error() << '\n';
  return exit_code(s);
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream os(path);
  if (!os) {
    std::cerr << "ionc: cannot write " << path << '\n';
    return false;
  }
  os << text << '\n';
  return static_cast<bool>(os);
}

struct CompileArgs {
  std::string input;
  std::string output;
  std::string report;
  bool verify = false;
  bool drop_terminal_rz = false;
  bool naive = false;
  bool no_phase_tracking = false;
  bool no_blocks = false;
  int verify_cap = 10;
};

int run_compile(const CompileArgs& a) {
  ionc_circuit* circ = nullptr;
  ionc_status s = ionc_circuit_from_qasm_file(a.input.c_str(), &circ);
  if (s != IONC_OK) return fail(s);
  ionc_options opts;
  ionc_options_default(&opts);
  opts.verify = a.verify;
  opts.verify_qubit_cap = a.verify_cap;
  opts.drop_terminal_rz = a.drop_terminal_rz;
  opts.naive = a.naive;
  opts.phase_tracking = !a.no_phase_tracking;
  opts.block_aggregation = !a.no_blocks;
  ionc_compilation* comp = nullptr;
  s = ionc_compile(circ, &opts, &comp);
  ionc_circuit_free(circ);
  if (s != IONC_OK) return fail(s);
  int rc = kExitOk;
  char* json = nullptr;
  if ((s = ionc_compilation_to_json(comp, &json)) != IONC_OK) {
    rc = fail(s);
  } else {
    if (a.output.empty()) {
      std::cout << json << '\n';
    } else if (!write_file(a.output, json)) {
      rc = kExitUsage;
    }
    ionc_string_free(json);
  }
  if (rc == kExitOk && !a.report.empty()) {
    char* report = nullptr;
    if ((s = ionc_compilation_report_json(comp, &report)) != IONC_OK) {
      rc = fail(s);
    } else {
      if (!write_file(a.report, report)) rc = kExitUsage;
      ionc_string_free(report);
    }
  }
  if (rc == kExitOk) {
    std::size_t one = 0, two = 0, rz = 0;
    ionc_compilation_counts(comp, &one, &two, &rz);
    std::cerr << "1qg " << one << " (terminal Rz " << rz << "), 2qg " << two << ", verification "
              << ionc_compilation_verification(comp) << '\n';
  }
  ionc_compilation_free(comp);
  return rc;
}

struct BenchArgs {
  std::string dir;
  std::string csv;
  int jobs = 1;
  int verify_cap = 10;
  std::size_t verify_max_gates = 0;
  bool verify = false;
};

int run_bench(const BenchArgs& a) {
  ionc_options opts;
  ionc_options_default(&opts);
  opts.verify = a.verify;
  opts.verify_qubit_cap = a.verify_cap;
  opts.verify_max_gates = a.verify_max_gates;
  std::size_t rows = 0, failed = 0;
  ionc_status s = ionc_bench(a.dir.c_str(), &opts, a.jobs, a.csv.c_str(), &rows, &failed);
  if (s != IONC_OK) return fail(s);
  std::cerr << rows << " circuits, " << failed << " failed, table in " << a.csv << '\n';
  return kExitOk;
}

int run_check_rules() {
  std::size_t failures = 0;
  char* report = nullptr;
  ionc_status s = ionc_check_rules(&failures, &report);
  if (s != IONC_OK) return fail(s);
  std::cout << report << '\n';
  ionc_string_free(report);
  std::cerr << (failures == 0 ? "all rules hold" : std::to_string(failures) + " rule samples failed") << '\n';
  return failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ionc: quantum circuit compiler for shuttling trapped-ion processors"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ionc_version());

  CompileArgs ca;
  auto* compile = app.add_subcommand("compile", "Compile an OpenQASM 2.0 file");
  compile->add_option("input", ca.input, "Input .qasm file")->required();
  compile->add_option("-o,--output", ca.output, "Output JSON (stdout if omitted)");
  compile->add_option("--report", ca.report, "Write the compile report JSON here");
  compile->add_flag("--verify", ca.verify, "Check unitary equivalence with the dense oracle");
  compile->add_option("--verify-cap", ca.verify_cap, "Largest qubit count verified")->check(CLI::PositiveNumber);
  compile->add_flag("--drop-terminal-rz", ca.drop_terminal_rz, "Omit the final Rz gates left by phase tracking");
  compile->add_flag("--naive", ca.naive, "Per-gate rebase without optimization");
  compile->add_flag("--no-phase-tracking", ca.no_phase_tracking, "Skip phase tracking and block aggregation");
  compile->add_flag("--no-blocks", ca.no_blocks, "Skip block aggregation");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Compile every .qasm file in a directory");
  bench->add_option("dir", ba.dir, "Directory of .qasm files")->required();
  bench->add_option("--csv", ba.csv, "Output CSV")->required();
  bench->add_option("--jobs", ba.jobs, "Parallel compilations")->check(CLI::PositiveNumber);
  bench->add_flag("--verify", ba.verify, "Verify circuits within the caps");
  bench->add_option("--verify-cap", ba.verify_cap, "Largest qubit count verified")->check(CLI::PositiveNumber);
  bench->add_option("--verify-max-gates", ba.verify_max_gates, "Largest input gate count verified (0: any)");

  auto* rules = app.add_subcommand("check-rules", "Oracle check of every decomposition rule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (*compile) return run_compile(ca);
  if (*bench) return run_bench(ba);
  if (*rules) return run_check_rules();
  return kExitUsage;
}
