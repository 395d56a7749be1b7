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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ionc/error.hpp"
#include "ionc/native.hpp"
#include "ionc/oracle.hpp"
#include "ionc/pipeline.hpp"
#include "ionc/qasm.hpp"
#include "support/reference.hpp"

namespace fs = std::filesystem;
using namespace ionc;

namespace {

struct Entry {
  std::string name;
  fs::path path;
  CircuitDag dag{1};
  GateCounts original;
  std::optional<Compilation> full;
  std::string error;
};

struct Outcome {
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

// Published counts: qubits, original 1q/2q, reference compiler 1q/2q.
struct TableRow {
  const char* name;
  int qubits;
  std::size_t orig_1q, orig_2q, ref_1q, ref_2q;
};

constexpr TableRow kSmallRows[] = {
    {"ex-1_166", 3, 10, 9, 24, 9},        {"ham3_102", 3, 9, 11, 18, 9},      {"3_17_13", 3, 19, 17, 48, 17},
    {"miller_11", 3, 27, 23, 56, 23},     {"4gt11_84", 4, 9, 9, 26, 9},       {"rd32-v0_66", 4, 18, 16, 29, 12},
    {"rd32-v1_68", 4, 20, 16, 32, 12},    {"decod24-v0_38", 4, 28, 23, 51, 21}, {"decod24-v2_43", 4, 30, 22, 56, 22},
    {"4mod5-v0_20", 5, 10, 10, 30, 10},
};

constexpr TableRow kQft10 = {"qft_10", 10, 110, 90, 0, 0};

std::string sha256_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::string data((std::istreambuf_iterator<char>(in)), {});
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return os.str();
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

double percentile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  double pos = q * static_cast<double>(v.size() - 1);
  auto lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

bool matches(const Entry& e, const TableRow& row) {
  return e.error.empty() && e.dag.n() == row.qubits && e.original.single_qubit == row.orig_1q &&
         e.original.two_qubit == row.orig_2q;
}

std::vector<Entry> load_corpus(const fs::path& dir) {
  std::vector<Entry> out;
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir)) {
    if (f.path().extension() == ".qasm") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    Entry e;
    e.name = f.stem().string();
    e.path = f;
    try {
      e.dag = qasm::load_file(f.string()).dag;
      e.original = count_gates(e.dag);
      e.full = compile(e.dag);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::size_t total(const Entry& e) { return e.original.total(); }

Outcome unitary_preservation(const std::vector<Entry>& corpus) {
  std::size_t checked = 0, failed = 0;
  double worst = 0.0;
  std::string first_failure;
  auto check = [&](const std::string& name, const CircuitDag& orig, const Compilation& comp) {
    int n = orig.n();
    Matrix a = circuit_unitary(orig);
    Matrix b = circuit_unitary(comp.circuit);
    double tol = 1e-8 * static_cast<double>(std::size_t{1} << n);
    Matrix pb = permutation_matrix(comp.report.permutation) * b;
    worst = std::max(worst, phase_distance(a, pb) / static_cast<double>(std::size_t{1} << n));
    ++checked;
    if (!equal_up_to_permutation_and_phase(a, b, comp.report.permutation, 1e-8)) {
      ++failed;
      if (first_failure.empty()) first_failure = name + " (tol " + std::to_string(tol) + ")";
    }
  };
  std::size_t corpus_checked = 0;
  for (const Entry& e : corpus) {
    if (!e.full || e.dag.n() > 10 || total(e) > 2000) continue;
    check(e.name, e.dag, *e.full);
    ++corpus_checked;
  }
  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> qubits(1, 6);
  std::uniform_int_distribution<int> gates(1, 100);
  std::size_t random_errors = 0;
  for (int t = 0; t < 200; ++t) {
    CircuitDag c = testing::random_circuit(rng, qubits(rng), gates(rng));
    try {
      check("random#" + std::to_string(t), c, compile(c));
    } catch (const std::exception& ex) {
      ++random_errors;
      if (first_failure.empty()) first_failure = "random#" + std::to_string(t) + ": " + ex.what();
    }
  }
  Outcome o;
  o.pass = corpus_checked >= 30 && failed == 0 && random_errors == 0;
  o.detail = std::to_string(corpus_checked) + " corpus + 200 random circuits, " + std::to_string(failed + random_errors) +
             " failures, worst ||A-cPB||/2^n = " + sci(worst);
  if (!first_failure.empty()) o.detail += ", first: " + first_failure;
  return o;
}

Outcome rule_identities() {
  auto start = std::chrono::steady_clock::now();
  std::size_t samples = 0, failed = 0;
  for (const RuleCheck& r : check_rules(kRuleTolerance)) {
    ++samples;
    if (!r.ok) ++failed;
  }
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ang(-7.0, 7.0);
  for (const std::string& name : qasm::builtin_gates()) {
    auto sig = qasm::builtin_signature(name);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<double> params;
      for (int k = 0; k < sig->second; ++k) params.push_back(trial == 0 ? std::numbers::pi / 2 * (k + 1) : ang(rng));
      std::vector<Qubit> qs(sig->first);
      std::iota(qs.begin(), qs.end(), 0);
      Matrix expected = qasm::qelib_matrix(name, params);
      Matrix got = sequence_unitary(sig->first, qasm::lower_builtin(name, params, qs));
      ++samples;
      if (!equal_up_to_global_phase(expected, got, kRuleTolerance)) ++failed;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.pass = failed == 0 && secs < 1.0;
  o.detail = std::to_string(samples) + " samples, " + std::to_string(failed) + " failures, " + fmt(secs * 1e3, 1) + " ms";
  return o;
}

Outcome gate_set(const std::vector<Entry>& corpus) {
  std::size_t ok = 0, bad = 0;
  std::string first;
  for (const Entry& e : corpus) {
    bool good = e.full.has_value();
    if (good) {
      for (const Gate& g : e.full->circuit.gates()) good = good && in_gate_set(GateSet::N, g);
    }
    (good ? ok : bad)++;
    if (!good && first.empty()) first = e.name + (e.error.empty() ? "" : ": " + e.error);
  }
  Outcome o;
  o.pass = bad == 0 && ok > 0;
  o.detail = std::to_string(ok) + "/" + std::to_string(ok + bad) + " circuits in the restricted set";
  if (!first.empty()) o.detail += ", first violation: " + first;
  return o;
}

Outcome monotonicity(const std::vector<Entry>& corpus) {
  std::size_t bad = 0, n = 0;
  std::string first;
  for (const Entry& e : corpus) {
    ++n;
    if (e.full && e.full->report.compiled.two_qubit <= e.original.two_qubit) continue;
    ++bad;
    if (first.empty()) first = e.name;
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(n - bad) + "/" + std::to_string(n) + " circuits";
  if (!first.empty()) o.detail += ", first violation: " + first;
  return o;
}

Outcome structural_bounds(const std::vector<Entry>& corpus) {
  std::size_t checks = 0, bad = 0, circuits = 0;
  std::string first;
  for (const Entry& e : corpus) {
    if (!e.full) {
      ++bad;
      continue;
    }
    ++circuits;
    std::size_t n = static_cast<std::size_t>(e.dag.n());
    int seen = 0;
    for (const StageSnapshot& s : e.full->report.stages) {
      std::optional<std::size_t> limit;
      if (s.stage == "build_rx_rz_sequences" || s.stage == "phase_tracking") limit = 4 * s.zz + 3 * n;
      if (s.stage == "restrict_single_qubit_angles") limit = 8 * s.zz + 5 * n;
      if (!limit) continue;
      ++seen;
      ++checks;
      if (s.single_qubit > *limit) {
        ++bad;
        if (first.empty()) first = e.name + " at " + s.stage;
      }
    }
    if (seen != 3) {
      ++bad;
      if (first.empty()) first = e.name + ": missing stage";
    }
  }
  Outcome o;
  o.pass = bad == 0 && checks > 0;
  o.detail = std::to_string(checks) + " checks over " + std::to_string(circuits) + " circuits, " +
             std::to_string(bad) + " violations";
  if (!first.empty()) o.detail += ", first: " + first;
  return o;
}

Outcome table_parity(const std::vector<Entry>& corpus) {
  std::map<std::string, const Entry*> by_name;
  for (const Entry& e : corpus) by_name[e.name] = &e;
  std::size_t compared = 0, bad = 0;
  std::vector<std::string> notes;
  for (const TableRow& row : kSmallRows) {
    auto it = by_name.find(row.name);
    if (it == by_name.end() || !matches(*it->second, row)) {
      notes.push_back(std::string(row.name) + " not comparable");
      ++bad;
      continue;
    }
    const Entry& e = *it->second;
    ++compared;
    const GateCounts& c = e.full->report.compiled;
    double limit = 1.25 * static_cast<double>(row.ref_1q + row.ref_2q);
    bool ok = c.two_qubit == row.ref_2q && static_cast<double>(c.total()) <= limit;
    if (!ok) {
      ++bad;
      notes.push_back(std::string(row.name) + " " + std::to_string(c.single_qubit) + "/" +
                      std::to_string(c.two_qubit));
    }
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = std::to_string(compared - std::min(compared, bad)) + "/" + std::to_string(std::size(kSmallRows)) +
             " rows with exact two-qubit count and total within +25%";
  for (const auto& n : notes) o.detail += "; " + n;
  return o;
}

Outcome baseline_dominance(const std::vector<Entry>& corpus) {
  std::size_t bad = 0, n = 0;
  std::vector<double> ratios;
  std::string first;
  for (const Entry& e : corpus) {
    if (!e.full) {
      ++bad;
      continue;
    }
    ++n;
    std::size_t naive = compile_naive(e.dag).report.compiled.total();
    std::size_t full = e.full->report.compiled.total();
    if (full > naive) {
      ++bad;
      if (first.empty()) first = e.name;
    }
    if (total(e) >= 50 && full > 0) ratios.push_back(static_cast<double>(naive) / static_cast<double>(full));
  }
  double avg = ratios.empty() ? 0.0 : std::accumulate(ratios.begin(), ratios.end(), 0.0) / ratios.size();
  Outcome o;
  o.pass = bad == 0 && !ratios.empty() && avg >= 2.0;
  o.detail = std::to_string(n - std::min(n, bad)) + "/" + std::to_string(n) + " circuits dominated, mean ratio " +
             fmt(avg, 2) + " (median " + fmt(ratios.empty() ? 0.0 : percentile(ratios, 0.5), 2) + ") over " + std::to_string(ratios.size()) + " circuits with >= 50 gates";
  if (!first.empty()) o.detail += ", first violation: " + first;
  return o;
}

Outcome phase_tracking_effect(const std::vector<Entry>& corpus) {
  CompileOptions off;
  off.phase_tracking = false;
  std::size_t bad = 0, n = 0, large = 0, large_ok = 0;
  double lo = 1e9, hi = 0.0;
  std::string first;
  for (const Entry& e : corpus) {
    if (!e.full) {
      ++bad;
      continue;
    }
    ++n;
    std::size_t without = compile(e.dag, off).report.compiled.single_qubit;
    std::size_t with = e.full->report.compiled.single_qubit;
    if (without < with) {
      ++bad;
      if (first.empty()) first = e.name;
    }
    if (total(e) >= 100) {
      ++large;
      if (with == 0) {
        large_ok += without > 0;
        continue;
      }
      double r = static_cast<double>(without) / static_cast<double>(with);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      if (r >= 1.3) ++large_ok;
    }
  }
  Outcome o;
  o.pass = bad == 0 && large > 0 && 2 * large_ok >= large;
  o.detail = std::to_string(n - std::min(n, bad)) + "/" + std::to_string(n) + " circuits not worse; ratio >= 1.3 on " +
             std::to_string(large_ok) + "/" + std::to_string(large) + " circuits with >= 100 gates (range " +
             fmt(lo, 2) + ".." + fmt(hi, 2) + ")";
  if (!first.empty()) o.detail += ", first violation: " + first;
  return o;
}

Outcome runtime_linearity(const std::vector<Entry>& corpus) {
  std::vector<double> per_gate;
  std::size_t smallest = SIZE_MAX, largest = 0;
  for (const Entry& e : corpus) {
    if (!e.full || total(e) == 0) continue;
    double best = e.full->report.compile_ms;
    for (int rep = 0; rep < 2; ++rep) best = std::min(best, compile(e.dag).report.compile_ms);
    per_gate.push_back(best / static_cast<double>(total(e)));
    smallest = std::min(smallest, total(e));
    largest = std::max(largest, total(e));
  }
  Outcome o;
  if (per_gate.size() < 10) {
    o.detail = "too few circuits";
    return o;
  }
  double p10 = percentile(per_gate, 0.1), p90 = percentile(per_gate, 0.9);
  double span = static_cast<double>(largest) / static_cast<double>(smallest);
  o.pass = span >= 100.0 && p90 < 5.0 * p10;
  o.detail = std::to_string(per_gate.size()) + " circuits, " + std::to_string(smallest) + ".." +
             std::to_string(largest) + " gates, ms/gate p10 " + fmt(p10, 4) + " p90 " + fmt(p90, 4) + " (x" +
             fmt(p90 / p10, 2) + ")";
  return o;
}

Outcome qft_reduction(const std::vector<Entry>& corpus) {
  Outcome o;
  auto it = std::find_if(corpus.begin(), corpus.end(), [](const Entry& e) { return e.name == kQft10.name; });
  if (it == corpus.end()) {
    o.skipped = true;
    o.detail = "qft_10.qasm not present";
    return o;
  }
  std::string hash = sha256_file(it->path);
  if (!matches(*it, kQft10)) {
    o.skipped = true;
    o.detail = "file differs from the published counts, sha256 " + hash;
    return o;
  }
  std::size_t r_gates = 0, terminal = it->full->report.compiled.terminal_rz;
  for (const Gate& g : it->full->circuit.gates()) r_gates += g.kind == GateKind::R;
  o.pass = it->full->report.compiled.two_qubit == 0 && r_gates == 0;
  o.detail = std::to_string(it->full->report.compiled.two_qubit) + " two-qubit, " + std::to_string(r_gates) +
             " R, " + std::to_string(terminal) + " terminal Rz; sha256 " + hash;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path(IONC_CORPUS_DIR);
  std::vector<Entry> corpus = load_corpus(dir);
  std::size_t errors = std::count_if(corpus.begin(), corpus.end(), [](const Entry& e) { return !e.error.empty(); });
  std::printf("corpus: %zu circuits from %s, %zu failed to compile\n", corpus.size(), dir.c_str(), errors);
  for (const Entry& e : corpus) {
    if (!e.error.empty()) std::printf("  %s: %s\n", e.name.c_str(), e.error.c_str());
  }

  struct Criterion {
    const char* title;
    Outcome (*run)(const std::vector<Entry>&);
  };
  const Criterion criteria[] = {
      {"unitary preservation", unitary_preservation},
      {"rule identities", [](const std::vector<Entry>&) { return rule_identities(); }},
      {"restricted gate set", gate_set},
      {"two-qubit monotonicity", monotonicity},
      {"single-qubit bounds", structural_bounds},
      {"small-circuit parity", table_parity},
      {"naive baseline dominance", baseline_dominance},
      {"phase tracking effect", phase_tracking_effect},
      {"per-gate compile time", runtime_linearity},
      {"qft_10 reduction", qft_reduction},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run(corpus);
    } catch (const std::exception& ex) {
      o.detail = std::string("exception: ") + ex.what();
    }
    const char* tag = o.skipped ? "SKIP" : (o.pass ? "PASS" : "FAIL");
    if (!o.pass && !o.skipped) ++failed;
    std::printf("[%s] %2d %s: %s\n", tag, index, c.title, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed;
}
