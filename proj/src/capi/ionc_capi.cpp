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

#include "ionc/ionc.h"

#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "ionc/error.hpp"
#include "ionc/oracle.hpp"
#include "ionc/pipeline.hpp"
#include "ionc/qasm.hpp"
#include "json.hpp"

struct ionc_circuit {
  ionc::CircuitDag dag;
  int measures_stripped = 0;
  int barriers_stripped = 0;
};

struct ionc_compilation {
  ionc::Compilation comp;
};

namespace {

thread_local std::string last_error;

ionc_status status_of(ionc::ErrorCode code) {
  using ionc::ErrorCode;
  switch (code) {
    case ErrorCode::Parse:
      return IONC_ERR_PARSE;
    case ErrorCode::UnsupportedFeature:
    case ErrorCode::UnsupportedGate:
      return IONC_ERR_UNSUPPORTED;
    case ErrorCode::Capacity:
      return IONC_ERR_CAPACITY;
    case ErrorCode::PassOrder:
      return IONC_ERR_PASS_ORDER;
    case ErrorCode::Verification:
      return IONC_ERR_VERIFICATION;
    case ErrorCode::Io:
      return IONC_ERR_IO;
    default:
      return IONC_ERR_INVALID_ARGUMENT;
  }
}

template <class F>
ionc_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return IONC_OK;
  } catch (const ionc::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return IONC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return IONC_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = new char[s.size() + 1];
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool cond, const char* what) {
  if (!cond) throw ionc::Error(ionc::ErrorCode::InvalidArgument, what);
}

ionc::CompileOptions to_options(const ionc_options* o) {
  ionc_options d;
  ionc_options_default(&d);
  if (!o) o = &d;
  ionc::CompileOptions opts;
  opts.verify = o->verify != 0;
  opts.verify_qubit_cap = o->verify_qubit_cap;
  opts.verify_max_gates = o->verify_max_gates;
  opts.drop_terminal_rz = o->drop_terminal_rz != 0;
  opts.phase_tracking = o->phase_tracking != 0;
  opts.block_aggregation = o->block_aggregation != 0;
  return opts;
}

ionc_circuit* wrap(ionc::qasm::Lowered&& low) {
  return new ionc_circuit{std::move(low.dag), low.measures_stripped, low.barriers_stripped};
}

}  // namespace

extern "C" {

const char* ionc_version(void) { return "0.1.0"; }

const char* ionc_status_string(ionc_status status) {
  switch (status) {
    case IONC_OK: return "ok";
    case IONC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case IONC_ERR_PARSE: return "parse";
    case IONC_ERR_UNSUPPORTED: return "unsupported";
    case IONC_ERR_CAPACITY: return "capacity";
    case IONC_ERR_PASS_ORDER: return "pass-order";
    case IONC_ERR_VERIFICATION: return "verification";
    case IONC_ERR_IO: return "io";
    case IONC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ionc_last_error(void) { return last_error.c_str(); }

void ionc_string_free(char* s) { delete[] s; }

void ionc_options_default(ionc_options* opts) {
  if (!opts) return;
  opts->verify = 0;
  opts->verify_qubit_cap = ionc::kDefaultQubitCap;
  opts->verify_max_gates = 0;
  opts->drop_terminal_rz = 0;
  opts->naive = 0;
  opts->phase_tracking = 1;
  opts->block_aggregation = 1;
}

ionc_status ionc_circuit_from_qasm(const char* text, ionc_circuit** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = wrap(ionc::qasm::load(text));
  });
}

ionc_status ionc_circuit_from_qasm_file(const char* path, ionc_circuit** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = wrap(ionc::qasm::load_file(path));
  });
}

ionc_status ionc_circuit_from_json(const char* json, ionc_circuit** out) {
  return guarded([&] {
    require(json && out, "null argument");
    *out = new ionc_circuit{ionc::CircuitDag::from_json(json)};
  });
}

void ionc_circuit_free(ionc_circuit* c) { delete c; }

int ionc_circuit_qubits(const ionc_circuit* c) { return c ? c->dag.n() : 0; }

size_t ionc_circuit_gate_count(const ionc_circuit* c) { return c ? c->dag.gate_count() : 0; }

ionc_status ionc_circuit_counts(const ionc_circuit* c, size_t* single_qubit, size_t* two_qubit) {
  return guarded([&] {
    require(c && single_qubit && two_qubit, "null argument");
    ionc::GateCounts g = ionc::count_gates(c->dag);
    *single_qubit = g.single_qubit;
    *two_qubit = g.two_qubit;
  });
}

ionc_status ionc_circuit_to_json(const ionc_circuit* c, char** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = dup(c->dag.to_json(2));
  });
}

ionc_status ionc_compile(const ionc_circuit* c, const ionc_options* opts, ionc_compilation** out) {
  return guarded([&] {
    require(c && out, "null argument");
    ionc::CompileOptions o = to_options(opts);
    auto* comp = new ionc_compilation{opts && opts->naive ? ionc::compile_naive(c->dag, false, o)
                                                          : ionc::compile(c->dag, o)};
    comp->comp.report.measures_stripped = static_cast<std::size_t>(c->measures_stripped);
    comp->comp.report.barriers_stripped = static_cast<std::size_t>(c->barriers_stripped);
    *out = comp;
  });
}

void ionc_compilation_free(ionc_compilation* comp) { delete comp; }

ionc_status ionc_compilation_to_json(const ionc_compilation* comp, char** out) {
  return guarded([&] {
    require(comp && out, "null argument");
    *out = dup(ionc::compilation_to_json(comp->comp));
  });
}

ionc_status ionc_compilation_report_json(const ionc_compilation* comp, char** out) {
  return guarded([&] {
    require(comp && out, "null argument");
    *out = dup(ionc::report_to_json(comp->comp.report));
  });
}

ionc_status ionc_compilation_circuit(const ionc_compilation* comp, ionc_circuit** out) {
  return guarded([&] {
    require(comp && out, "null argument");
    *out = new ionc_circuit{comp->comp.circuit};
  });
}

ionc_status ionc_compilation_counts(const ionc_compilation* comp, size_t* single_qubit, size_t* two_qubit,
                                    size_t* terminal_rz) {
  return guarded([&] {
    require(comp && single_qubit && two_qubit && terminal_rz, "null argument");
    const ionc::GateCounts& g = comp->comp.report.compiled;
    *single_qubit = g.single_qubit;
    *two_qubit = g.two_qubit;
    *terminal_rz = g.terminal_rz;
  });
}

const char* ionc_compilation_verification(const ionc_compilation* comp) {
  if (!comp) return "not-run";
  switch (comp->comp.report.verification) {
    case ionc::Verdict::Passed: return "passed";
    case ionc::Verdict::Failed: return "failed";
    case ionc::Verdict::Skipped: return "skipped";
    case ionc::Verdict::NotRun: return "not-run";
  }
  return "not-run";
}

ionc_status ionc_check_rules(size_t* failures, char** report_json) {
  return guarded([&] {
    require(failures, "null argument");
    nlohmann::json arr = nlohmann::json::array();
    std::size_t bad = 0;
    for (const ionc::RuleCheck& r : ionc::check_rules()) {
      bad += !r.ok;
      arr.push_back({{"rule", r.rule}, {"sample", r.sample}, {"error", r.error}, {"ok", r.ok}});
    }
    *failures = bad;
    if (report_json) *report_json = dup(arr.dump(2));
  });
}

ionc_status ionc_bench(const char* dir, const ionc_options* opts, int jobs, const char* csv_path, size_t* rows,
                       size_t* failed) {
  return guarded([&] {
    require(dir && csv_path && rows && failed, "null argument");
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
      throw ionc::Error(ionc::ErrorCode::Io, std::string("not a directory: ") + dir);
    }
    std::vector<ionc::BenchmarkRow> table = ionc::run_benchmark(dir, to_options(opts), jobs);
    std::ofstream os(csv_path);
    if (!os) throw ionc::Error(ionc::ErrorCode::Io, std::string("cannot write ") + csv_path);
    ionc::write_csv(os, table);
    *rows = table.size();
    *failed = 0;
    for (const auto& r : table) *failed += r.failed();
  });
}

}  // extern "C"
