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

#include "ionc/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "ionc/error.hpp"
#include "ionc/native.hpp"
#include "ionc/qasm.hpp"
#include "json.hpp"

namespace ionc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Context {
  CircuitDag c;
  const CompileOptions& opts;
  std::optional<BlockPartition> part;
  Schedule schedule;
};

BlockPartition& partition(Context& cx) {
  if (!cx.part) cx.part = build_blocks(cx.c);
  return *cx.part;
}

using PassFn = std::function<void(Context&)>;

const std::map<std::string, PassFn>& pass_table() {
  static const std::map<std::string, PassFn> table = {
      {"eliminate_swaps", [](Context& x) { eliminate_swaps(x.c); }},
      {"remove_redundancies", [](Context& x) { remove_redundancies(x.c); }},
      {"commute_through_multis", [](Context& x) { commute_through_multis(x.c); }},
      {"reduce_fixpoint", [](Context& x) { reduce_fixpoint(x.c); }},
      {"match_macros", [](Context& x) { match_macros(x.c, x.opts.macros); }},
      {"squash_single_qubit_runs", [](Context& x) { squash_single_qubit_runs(x.c); }},
      {"expand_tk1", [](Context& x) { expand_tk1(x.c); }},
      {"rebase_to_M", [](Context& x) { rebase_to_M(x.c); }},
      {"rebase_naive", [](Context& x) { rebase_naive(x.c); }},
      {"build_rx_rz_sequences", [](Context& x) { build_rx_rz_sequences(x.c); }},
      {"restrict_single_qubit_angles", [](Context& x) { restrict_single_qubit_angles(x.c); }},
      {"restrict_rx_only", [](Context& x) { restrict_rx_only(x.c); }},
      {"merge_rz_through_zz", [](Context& x) { merge_rz_through_zz(x.c); }},
      {"phase_tracking", [](Context& x) { phase_tracking(x.c, x.opts.drop_terminal_rz); }},
      {"build_blocks", [](Context& x) { x.part = build_blocks(x.c); }},
      {"rearrange_blocks", [](Context& x) { rearrange_blocks(x.c, partition(x)); }},
      {"split_angles", [](Context& x) { split_angles(x.c, partition(x)); }},
      {"order_blocks", [](Context& x) { x.schedule = order_blocks(x.c, partition(x)); }},
      {"restrict_zz_angles", [](Context& x) { restrict_zz_angles(x.c, x.schedule.empty() ? nullptr : &x.schedule); }},
  };
  return table;
}

// Passes after which the single-qubit count bound is checked, with the
// coefficients (a, b) of a*omega + b*n.
std::optional<std::pair<std::size_t, std::size_t>> bound_after(const std::string& pass) {
  if (pass == "build_rx_rz_sequences" || pass == "phase_tracking") return std::pair<std::size_t, std::size_t>{4, 3};
  if (pass == "restrict_single_qubit_angles") return std::pair<std::size_t, std::size_t>{8, 5};
  return std::nullopt;
}

bool identity_perm(const std::vector<Qubit>& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != static_cast<Qubit>(k)) return false;
  }
  return true;
}

void verify(const CircuitDag& original, const Context& cx, CompileReport& r) {
  if (!cx.opts.verify) return;
  if (original.n() > cx.opts.verify_qubit_cap ||
      (cx.opts.verify_max_gates != 0 && original.gate_count() > cx.opts.verify_max_gates)) {
    r.verification = Verdict::Skipped;
    return;
  }
  const int cap = cx.opts.verify_qubit_cap;
  Matrix a = circuit_unitary(original, cap);
  if (!identity_perm(original.output_permutation())) {
    a = permutation_matrix(original.output_permutation()) * a;
  }
  Matrix b = permutation_matrix(cx.c.output_permutation()) * circuit_unitary(cx.c, cap);
  bool ok = false;
  if (cx.opts.drop_terminal_rz) {
    ok = equal_up_to_diagonal(a, b);
  } else {
    r.verification_error = phase_distance(a, b);
    ok = equal_up_to_global_phase(a, b);
  }
  r.verification = ok ? Verdict::Passed : Verdict::Failed;
  if (!ok) {
    throw Error(ErrorCode::Verification,
                "compiled circuit differs from the input (error " + std::to_string(r.verification_error) + ")");
  }
}

Compilation run_flow(const CircuitDag& input, const std::vector<std::string>& flow, const CompileOptions& opts) {
  const auto& table = pass_table();
  for (const std::string& name : flow) {
    if (!table.count(name)) throw Error(ErrorCode::InvalidArgument, "unknown pass '" + name + "'");
  }
  if (opts.verify_qubit_cap < 1) throw Error(ErrorCode::InvalidArgument, "verify_qubit_cap must be at least 1");
  input.validate();
  Context cx{input, opts, std::nullopt, {}};
  CompileReport r;
  r.n = input.n();
  r.original = count_gates(input);
  const auto t_start = Clock::now();
  for (const std::string& name : flow) {
    const auto t0 = Clock::now();
    try {
      table.at(name)(cx);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.code(), name + ": " + e.what());
    }
    StageSnapshot snap;
    snap.stage = name;
    snap.elapsed_ms = ms_since(t0);
    GateCounts gc = count_gates(cx.c);
    snap.single_qubit = gc.single_qubit;
    snap.two_qubit = gc.two_qubit;
    snap.zz = zz_count(cx.c);
    r.stages.push_back(snap);
    if (name != "restrict_zz_angles") r.omega = snap.zz;
    if (auto coeff = bound_after(name)) {
      std::size_t limit = coeff->first * snap.zz + coeff->second * static_cast<std::size_t>(r.n);
      r.bounds.push_back({name, snap.single_qubit, limit, snap.single_qubit <= limit});
    }
  }
  r.compile_ms = ms_since(t_start);
  r.compiled = count_gates(cx.c);
  r.permutation = cx.c.output_permutation();
  r.schedule = cx.schedule;
  verify(input, cx, r);
  return {std::move(cx.c), std::move(r)};
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotRun: return "not-run";
    case Verdict::Passed: return "passed";
    case Verdict::Failed: return "failed";
    case Verdict::Skipped: return "skipped";
  }
  return "unknown";
}

bool CompileReport::bounds_ok() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.ok; });
}

GateCounts count_gates(const CircuitDag& c, bool include_terminal_rz) {
  GateCounts gc;
  for (GateId id : c.execution_order()) {
    const Gate& g = c.gate(id);
    if (!g.single_qubit()) {
      ++gc.two_qubit;
      continue;
    }
    if (g.kind == GateKind::Rz && !c.next_gate(id, g.q[0])) {
      ++gc.terminal_rz;
      if (!include_terminal_rz) continue;
    }
    ++gc.single_qubit;
  }
  return gc;
}

bool in_restricted_set(const CircuitDag& c) {
  for (GateId id : c.execution_order()) {
    if (!in_gate_set(GateSet::N, c.gate(id))) return false;
  }
  return true;
}

const std::vector<std::string>& pipeline_passes() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, fn] : pass_table()) v.push_back(k);
    return v;
  }();
  return names;
}

std::vector<std::string> default_flow(const CompileOptions& opts) {
  std::vector<std::string> flow = {"eliminate_swaps",
                                   "reduce_fixpoint",
                                   "match_macros",
                                   "reduce_fixpoint",
                                   "rebase_to_M",
                                   "build_rx_rz_sequences",
                                   "restrict_single_qubit_angles",
                                   "merge_rz_through_zz"};
  if (opts.phase_tracking) flow.push_back("phase_tracking");
  if (opts.block_aggregation && opts.phase_tracking) {
    for (const char* s : {"build_blocks", "rearrange_blocks", "split_angles", "order_blocks"}) flow.push_back(s);
  }
  flow.push_back("restrict_zz_angles");
  return flow;
}

Compilation compile(const CircuitDag& c, const CompileOptions& opts) {
  return run_flow(c, opts.pass_override ? *opts.pass_override : default_flow(opts), opts);
}

Compilation compile_naive(const CircuitDag& c, bool remove_trivial, const CompileOptions& opts) {
  std::vector<std::string> flow = {"eliminate_swaps", "rebase_naive"};
  if (remove_trivial) flow.push_back("remove_redundancies");
  flow.push_back("restrict_rx_only");
  flow.push_back("restrict_zz_angles");
  return run_flow(c, flow, opts);
}

namespace {

nlohmann::json counts_json(const GateCounts& g) {
  return {{"single_qubit", g.single_qubit}, {"two_qubit", g.two_qubit}, {"terminal_rz", g.terminal_rz}};
}

nlohmann::json report_json(const CompileReport& r) {
  nlohmann::json j;
  j["qubits"] = r.n;
  j["omega"] = r.omega;
  j["original"] = counts_json(r.original);
  j["compiled"] = counts_json(r.compiled);
  j["compile_ms"] = r.compile_ms;
  j["verification"] = to_string(r.verification);
  j["verification_error"] = r.verification_error;
  j["permutation"] = r.permutation;
  j["measures_stripped"] = r.measures_stripped;
  j["barriers_stripped"] = r.barriers_stripped;
  j["stages"] = nlohmann::json::array();
  for (const StageSnapshot& s : r.stages) {
    j["stages"].push_back({{"stage", s.stage},
                           {"single_qubit", s.single_qubit},
                           {"two_qubit", s.two_qubit},
                           {"zz", s.zz},
                           {"elapsed_ms", s.elapsed_ms}});
  }
  j["bounds"] = nlohmann::json::array();
  for (const BoundCheck& b : r.bounds) {
    j["bounds"].push_back({{"stage", b.stage}, {"single_qubit", b.single_qubit}, {"limit", b.limit}, {"ok", b.ok}});
  }
  return j;
}

}  // namespace

std::string report_to_json(const CompileReport& r, int indent) { return report_json(r).dump(indent); }

std::string compilation_to_json(const Compilation& comp, int indent) {
  nlohmann::json j = nlohmann::json::parse(comp.circuit.to_json());
  // Schedule ids index the circuit's "gates" array.
  std::vector<GateId> order = comp.circuit.execution_order();
  std::map<GateId, std::size_t> index;
  for (std::size_t k = 0; k < order.size(); ++k) index[order[k]] = k;
  j["schedule"] = nlohmann::json::array();
  for (const ScheduleEntry& e : comp.report.schedule) {
    std::vector<std::size_t> gates;
    for (GateId g : e.gates) gates.push_back(index.at(g));
    j["schedule"].push_back({{"type", to_string(e.type)}, {"qubits", e.qubits}, {"gates", gates}});
  }
  j["report"] = report_json(comp.report);
  return j.dump(indent);
}

std::vector<BenchmarkRow> run_benchmark(const std::filesystem::path& dir, const CompileOptions& opts, int jobs) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw Error(ErrorCode::Io, "not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".qasm") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BenchmarkRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < files.size(); k = next++) {
      BenchmarkRow& row = rows[k];
      row.name = files[k].stem().string();
      try {
        qasm::Lowered low = qasm::load_file(files[k].string());
        row.qubits = low.dag.n();
        row.original = count_gates(low.dag);
        Compilation full = compile(low.dag, opts);
        row.compiled = full.report.compiled;
        row.compile_ms = full.report.compile_ms;
        row.verification = full.report.verification;
        row.ms_per_gate = row.original.total() ? row.compile_ms / static_cast<double>(row.original.total()) : 0.0;
        CompileOptions naive_opts = opts;
        naive_opts.verify = false;
        row.naive = compile_naive(low.dag, false, naive_opts).report.compiled;
        row.reduction = row.compiled.total()
                            ? static_cast<double>(row.naive.total()) / static_cast<double>(row.compiled.total())
                            : 0.0;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

void write_csv(std::ostream& os, const std::vector<BenchmarkRow>& rows) {
  os << "name,qubits,orig_1qg,orig_2qg,comp_1qg,comp_2qg,comp_terminal_rz,naive_1qg,naive_2qg,reduction,"
        "compile_ms,ms_per_gate,verification,error\n";
  for (const BenchmarkRow& r : rows) {
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    os << r.name << ',' << r.qubits << ',' << r.original.single_qubit << ',' << r.original.two_qubit << ','
       << r.compiled.single_qubit << ',' << r.compiled.two_qubit << ',' << r.compiled.terminal_rz << ','
       << r.naive.single_qubit << ',' << r.naive.two_qubit << ',' << r.reduction << ',' << r.compile_ms << ','
       << r.ms_per_gate << ',' << to_string(r.verification) << ',' << err << '\n';
  }
}

}  // namespace ionc
