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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "ionc/error.hpp"
#include "ionc/native.hpp"
#include "ionc/pipeline.hpp"
#include "ionc/qasm.hpp"
#include "json.hpp"
#include "support/reference.hpp"

namespace ionc {
namespace {

namespace fs = std::filesystem;
using K = GateKind;

CircuitDag corpus(const std::string& name) {
  return qasm::load_file(std::string(IONC_CORPUS_DIR) + "/" + name + ".qasm").dag;
}

TEST(Compile, EmptyCircuit) {
  CircuitDag c(3);
  CompileOptions opts;
  opts.verify = true;
  Compilation comp = compile(c, opts);
  EXPECT_EQ(comp.circuit.gate_count(), 0u);
  EXPECT_EQ(comp.report.verification, Verdict::Passed);
  EXPECT_EQ(comp.report.omega, 0u);
}

TEST(Compile, SmallBenchmarkCircuit) {
  CircuitDag c = corpus("ex-1_166");
  ASSERT_EQ(c.n(), 3);
  CompileOptions opts;
  opts.verify = true;
  Compilation comp = compile(c, opts);
  EXPECT_EQ(comp.report.verification, Verdict::Passed);
  EXPECT_LT(comp.report.verification_error, 1e-8);
  EXPECT_TRUE(in_restricted_set(comp.circuit));
  EXPECT_LE(comp.report.compiled.two_qubit, 9u);
  EXPECT_LE(comp.report.compiled.single_qubit, 24u);
  EXPECT_TRUE(comp.report.bounds_ok());
  EXPECT_FALSE(comp.report.bounds.empty());
  EXPECT_EQ(comp.report.original.two_qubit, 9u);
  EXPECT_EQ(comp.report.original.single_qubit, 10u);
}

TEST(Compile, StagesAreRecordedInOrder) {
  Compilation comp = compile(corpus("ham3_102"));
  auto flow = default_flow();
  ASSERT_EQ(comp.report.stages.size(), flow.size());
  for (std::size_t k = 0; k < flow.size(); ++k) EXPECT_EQ(comp.report.stages[k].stage, flow[k]);
  CompileOptions off;
  off.phase_tracking = false;
  auto short_flow = default_flow(off);
  EXPECT_EQ(std::count(short_flow.begin(), short_flow.end(), "phase_tracking"), 0);
  EXPECT_EQ(std::count(short_flow.begin(), short_flow.end(), "order_blocks"), 0);
}

TEST(Compile, IsDeterministic) {
  CircuitDag c = corpus("rd32-v0_66");
  std::string a = compilation_to_json(compile(c));
  std::string b = compilation_to_json(compile(c));
  auto ja = nlohmann::json::parse(a);
  auto jb = nlohmann::json::parse(b);
  ja["report"].erase("compile_ms");
  jb["report"].erase("compile_ms");
  ja["report"].erase("stages");
  jb["report"].erase("stages");
  EXPECT_EQ(ja, jb);
}

TEST(Compile, RandomCircuitsVerify) {
  std::mt19937 rng(101);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + t % 5;
    CircuitDag c = testing::random_circuit(rng, n, 30);
    CompileOptions opts;
    opts.verify = true;
    opts.drop_terminal_rz = t % 3 == 0;
    Compilation comp;
    ASSERT_NO_THROW(comp = compile(c, opts)) << t;
    EXPECT_EQ(comp.report.verification, Verdict::Passed) << t;
    EXPECT_TRUE(in_restricted_set(comp.circuit)) << t;
    EXPECT_TRUE(comp.report.bounds_ok()) << t;
  }
}

TEST(Compile, SwapsBecomeAPermutation) {
  CircuitDag c(3);
  c.append(Gate(K::H, {0}));
  c.append(Gate(K::SWAP, {0, 2}));
  c.append(Gate(K::CNOT, {2, 1}));
  CompileOptions opts;
  opts.verify = true;
  Compilation comp = compile(c, opts);
  EXPECT_EQ(comp.report.verification, Verdict::Passed);
  EXPECT_EQ(comp.report.permutation, (std::vector<Qubit>{2, 1, 0}));
  EXPECT_EQ(comp.report.compiled.two_qubit, 1u);
}

TEST(Compile, VerificationSkipsLargeRegisters) {
  CircuitDag c(4);
  c.append(Gate(K::CNOT, {0, 3}));
  CompileOptions opts;
  opts.verify = true;
  opts.verify_qubit_cap = 3;
  EXPECT_EQ(compile(c, opts).report.verification, Verdict::Skipped);
  opts.verify_qubit_cap = 10;
  opts.verify_max_gates = 0;
  EXPECT_EQ(compile(c, opts).report.verification, Verdict::Passed);
  opts.verify = false;
  EXPECT_EQ(compile(c, opts).report.verification, Verdict::NotRun);
}

TEST(Compile, PassOverride) {
  CircuitDag c(2);
  c.append(Gate(K::H, {0}));
  c.append(Gate(K::H, {0}));
  CompileOptions opts;
  opts.pass_override = std::vector<std::string>{"reduce_fixpoint"};
  EXPECT_EQ(compile(c, opts).circuit.gate_count(), 0u);
  opts.pass_override = std::vector<std::string>{"no_such_pass"};
  try {
    compile(c, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Compile, PassOrderErrorsNameTheStage) {
  CircuitDag c(1);
  c.append(Gate(K::H, {0}));
  CompileOptions opts;
  opts.pass_override = std::vector<std::string>{"phase_tracking"};
  try {
    compile(c, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PassOrder);
    EXPECT_NE(std::string(e.what()).find("phase_tracking"), std::string::npos);
  }
}

TEST(CompileNaive, CnotUsesTheFullTemplate) {
  CircuitDag c(2);
  c.append(Gate(K::CNOT, {0, 1}));
  Compilation comp = compile_naive(c);
  EXPECT_EQ(comp.circuit.gate_count(), 10u);
  EXPECT_EQ(comp.report.compiled.two_qubit, 1u);
  EXPECT_TRUE(in_restricted_set(comp.circuit));
  EXPECT_TRUE(equal_up_to_global_phase(circuit_unitary(c), circuit_unitary(comp.circuit), 1e-10));
}

TEST(CompileNaive, NeverBeatsTheFullFlow) {
  for (const char* name : {"ex-1_166", "ham3_102", "4gt11_84", "rd32-v0_66"}) {
    CircuitDag c = corpus(name);
    Compilation naive = compile_naive(c);
    Compilation trivial = compile_naive(c, true);
    Compilation full = compile(c);
    EXPECT_LE(full.report.compiled.total(), trivial.report.compiled.total()) << name;
    EXPECT_LE(trivial.report.compiled.total(), naive.report.compiled.total()) << name;
    EXPECT_TRUE(in_restricted_set(naive.circuit));
    EXPECT_TRUE(equal_up_to_global_phase(circuit_unitary(c), circuit_unitary(naive.circuit)));
  }
}

TEST(CountGates, TerminalRz) {
  CircuitDag c(2);
  c.append(Gate(K::Rz, {0}, {0.5}));
  c.append(Gate(K::ZZ, {0, 1}, {0.5}));
  c.append(Gate(K::Rz, {1}, {0.5}));
  c.append(Gate(K::Rx, {0}, {0.5}));
  GateCounts with = count_gates(c);
  EXPECT_EQ(with.single_qubit, 3u);
  EXPECT_EQ(with.two_qubit, 1u);
  EXPECT_EQ(with.terminal_rz, 1u);
  GateCounts without = count_gates(c, false);
  EXPECT_EQ(without.single_qubit, 2u);
  EXPECT_EQ(without.total(), 3u);
}

TEST(Json, CompilationOutput) {
  Compilation comp = compile(corpus("ex-1_166"));
  auto j = nlohmann::json::parse(compilation_to_json(comp));
  ASSERT_TRUE(j.contains("gates"));
  ASSERT_TRUE(j.contains("schedule"));
  ASSERT_TRUE(j.contains("report"));
  std::size_t gates = j["gates"].size();
  EXPECT_EQ(gates, comp.circuit.gate_count());
  std::vector<int> seen(gates, 0);
  for (const auto& e : j["schedule"]) {
    for (const auto& g : e["gates"]) seen.at(g.get<std::size_t>())++;
  }
  for (int s : seen) EXPECT_EQ(s, 1);
  EXPECT_EQ(j["report"]["compiled"]["two_qubit"].get<std::size_t>(), comp.report.compiled.two_qubit);
  CircuitDag back = CircuitDag::from_json(compilation_to_json(comp));
  EXPECT_TRUE(equal_up_to_global_phase(circuit_unitary(back), circuit_unitary(comp.circuit), 1e-12));
}

class BenchDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ionc_bench_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    fs::copy_file(fs::path(IONC_CORPUS_DIR) / "ex-1_166.qasm", dir_ / "a.qasm");
    std::ofstream(dir_ / "b.qasm") << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nfoo q[0];\n";
    std::ofstream(dir_ / "notes.txt") << "ignored";
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(BenchDir, RowsAndCsv) {
  CompileOptions opts;
  opts.verify = true;
  auto rows = run_benchmark(dir_, opts, 2);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].name, "a");
  EXPECT_FALSE(rows[0].failed());
  EXPECT_EQ(rows[0].verification, Verdict::Passed);
  EXPECT_GT(rows[0].reduction, 1.0);
  EXPECT_EQ(rows[1].name, "b");
  EXPECT_TRUE(rows[1].failed());
  std::ostringstream os;
  write_csv(os, rows);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line,
            "name,qubits,orig_1qg,orig_2qg,comp_1qg,comp_2qg,comp_terminal_rz,naive_1qg,naive_2qg,reduction,"
            "compile_ms,ms_per_gate,verification,error");
  int lines = 0;
  while (std::getline(is, line)) ++lines;
  EXPECT_EQ(lines, 2);
}

TEST(Bench, MissingDirectory) {
  try {
    run_benchmark("/nonexistent/ionc");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
}

}  // namespace
}  // namespace ionc
