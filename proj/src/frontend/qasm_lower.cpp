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

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "ionc/error.hpp"
#include "ionc/qasm.hpp"

namespace ionc::qasm {

using std::numbers::pi;

namespace {

struct Builtin {
  int arity;
  int params;
};

const std::map<std::string, Builtin, std::less<>>& builtin_table() {
  static const std::map<std::string, Builtin, std::less<>> t{
      {"id", {1, 0}},  {"x", {1, 0}},   {"y", {1, 0}},   {"z", {1, 0}},   {"h", {1, 0}},
      {"s", {1, 0}},   {"sdg", {1, 0}}, {"t", {1, 0}},   {"tdg", {1, 0}}, {"rx", {1, 1}},
      {"ry", {1, 1}},  {"rz", {1, 1}},  {"u1", {1, 1}},  {"u2", {1, 2}},  {"u3", {1, 3}},
      {"U", {1, 3}},   {"cx", {2, 0}},  {"CX", {2, 0}},  {"cz", {2, 0}},  {"cu1", {2, 1}},
      {"swap", {2, 0}}, {"cry", {2, 1}}, {"rzz", {2, 1}}, {"ccx", {3, 0}},
  };
  return t;
}

[[noreturn]] void fail(ErrorCode code, const std::string& m, Position p) {
  throw ParseError(code, m, p.line, p.column);
}

using Env = std::map<std::string, double, std::less<>>;

double eval(const Expr& e, const Env& env) {
  switch (e.op) {
    case Expr::Op::Number: return e.value;
    case Expr::Op::Pi: return pi;
    case Expr::Op::Param: {
      auto it = env.find(e.name);
      if (it == env.end()) fail(ErrorCode::Parse, "unknown parameter '" + e.name + "'", e.pos);
      return it->second;
    }
    case Expr::Op::Neg: return -eval(*e.args[0], env);
    case Expr::Op::Add: return eval(*e.args[0], env) + eval(*e.args[1], env);
    case Expr::Op::Sub: return eval(*e.args[0], env) - eval(*e.args[1], env);
    case Expr::Op::Mul: return eval(*e.args[0], env) * eval(*e.args[1], env);
    case Expr::Op::Div: return eval(*e.args[0], env) / eval(*e.args[1], env);
    case Expr::Op::Pow: return std::pow(eval(*e.args[0], env), eval(*e.args[1], env));
    case Expr::Op::Call: {
      double x = eval(*e.args[0], env);
      if (e.name == "sin") return std::sin(x);
      if (e.name == "cos") return std::cos(x);
      if (e.name == "tan") return std::tan(x);
      if (e.name == "exp") return std::exp(x);
      if (e.name == "ln") return std::log(x);
      return std::sqrt(x);
    }
  }
  return 0.0;
}

class Lowerer {
 public:
  explicit Lowerer(const Program& p) : prog_(p) {
    int offset = 0;
    for (const Register& r : p.qregs) {
      qregs_[r.name] = {offset, r.size};
      offset += r.size;
    }
    declared_ = offset;
    for (const Register& r : p.cregs) cregs_[r.name] = r.size;
    for (const GateDef& d : p.gates) {
      if (defs_.count(d.name)) fail(ErrorCode::Parse, "gate '" + d.name + "' redefined", d.pos);
      defs_[d.name] = &d;
    }
  }

  void run() {
    for (const Statement& s : prog_.statements) {
      if (const auto* g = std::get_if<GateCall>(&s)) {
        top_level(*g);
      } else if (const auto* m = std::get_if<Measure>(&s)) {
        auto qs = resolve(m->qubit);
        auto it = cregs_.find(m->bit.reg);
        if (it == cregs_.end()) fail(ErrorCode::Parse, "unknown classical register '" + m->bit.reg + "'", m->bit.pos);
        int bits = m->bit.index ? 1 : it->second;
        if (m->bit.index && (*m->bit.index < 0 || *m->bit.index >= it->second)) {
          fail(ErrorCode::Parse, "classical index out of range", m->bit.pos);
        }
        if (static_cast<int>(qs.size()) != bits) fail(ErrorCode::Parse, "measure size mismatch", m->pos);
        measures += bits;
      } else {
        const auto& b = std::get<Barrier>(s);
        for (const Argument& a : b.args) resolve(a);
        ++barriers;
      }
    }
  }

  int declared() const { return declared_; }

  std::vector<Gate> emitted;                 // with flattened indices
  int measures = 0;
  int barriers = 0;

 private:
  std::vector<Qubit> resolve(const Argument& a) const {
    auto it = qregs_.find(a.reg);
    if (it == qregs_.end()) fail(ErrorCode::Parse, "unknown quantum register '" + a.reg + "'", a.pos);
    auto [off, size] = it->second;
    if (a.index) {
      if (*a.index < 0 || *a.index >= size) {
        fail(ErrorCode::Parse, "index " + std::to_string(*a.index) + " out of range for '" + a.reg + "'", a.pos);
      }
      return {off + *a.index};
    }
    std::vector<Qubit> out;
    for (int i = 0; i < size; ++i) out.push_back(off + i);
    return out;
  }

  void top_level(const GateCall& g) {
    std::vector<double> params;
    for (const ExprPtr& e : g.params) params.push_back(eval(*e, {}));
    std::vector<std::vector<Qubit>> args;
    std::size_t width = 1;
    for (const Argument& a : g.args) {
      args.push_back(resolve(a));
      if (!a.index) {
        std::size_t sz = args.back().size();
        if (width != 1 && sz != width) fail(ErrorCode::Parse, "register sizes differ in broadcast", a.pos);
        width = sz;
      }
    }
    for (std::size_t k = 0; k < width; ++k) {
      std::vector<Qubit> qs;
      for (std::size_t i = 0; i < args.size(); ++i) qs.push_back(args[i].size() == 1 ? args[i][0] : args[i][k]);
      apply(g.name, params, qs, g.pos);
    }
  }

  void apply(const std::string& name, const std::vector<double>& params, const std::vector<Qubit>& qs,
             Position pos) {
    for (std::size_t i = 0; i < qs.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (qs[i] == qs[j]) fail(ErrorCode::Parse, "gate '" + name + "' repeats a qubit", pos);
      }
    }
    auto def = defs_.find(name);
    if (def != defs_.end()) {
      const GateDef& d = *def->second;
      if (params.size() != d.params.size() || qs.size() != d.qubits.size()) {
        fail(ErrorCode::Parse, "wrong number of parameters or qubits for '" + name + "'", pos);
      }
      for (const std::string& active : stack_) {
        if (active == name) fail(ErrorCode::Parse, "recursive gate definition '" + name + "'", pos);
      }
      stack_.push_back(name);
      Env env;
      for (std::size_t i = 0; i < params.size(); ++i) env[d.params[i]] = params[i];
      for (const GateCall& call : d.body) {
        std::vector<double> ps;
        for (const ExprPtr& e : call.params) ps.push_back(eval(*e, env));
        std::vector<Qubit> inner;
        for (const Argument& a : call.args) {
          for (std::size_t i = 0; i < d.qubits.size(); ++i) {
            if (d.qubits[i] == a.reg) inner.push_back(qs[i]);
          }
        }
        apply(call.name, ps, inner, call.pos);
      }
      stack_.pop_back();
      return;
    }
    auto sig = builtin_signature(name);
    if (!sig) fail(ErrorCode::UnsupportedGate, "unsupported gate '" + name + "'", pos);
    if (static_cast<int>(qs.size()) != sig->first || static_cast<int>(params.size()) != sig->second) {
      fail(ErrorCode::Parse, "wrong number of parameters or qubits for '" + name + "'", pos);
    }
    for (Gate& g : lower_builtin(name, params, qs)) emitted.push_back(g);
  }

  const Program& prog_;
  std::map<std::string, std::pair<int, int>, std::less<>> qregs_;
  std::map<std::string, int, std::less<>> cregs_;
  std::map<std::string, const GateDef*, std::less<>> defs_;
  std::vector<std::string> stack_;
  int declared_ = 0;
};

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

Matrix controlled(const Matrix& u) {
  Matrix m = Matrix::Identity(4, 4);
  m(1, 1) = u(0, 0);
  m(1, 3) = u(0, 1);
  m(3, 1) = u(1, 0);
  m(3, 3) = u(1, 1);
  return m;
}

Matrix mat2(cd a, cd b, cd c, cd d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

Matrix u3(double t, double p, double l) {
  Matrix m(2, 2);
  m << std::cos(t / 2), -std::exp(kI * l) * std::sin(t / 2), std::exp(kI * p) * std::sin(t / 2),
      std::exp(kI * (p + l)) * std::cos(t / 2);
  return m;
}

}  // namespace

const std::vector<std::string>& builtin_gates() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : builtin_table()) out.push_back(k);
    return out;
  }();
  return names;
}

std::optional<std::pair<int, int>> builtin_signature(std::string_view name) {
  auto it = builtin_table().find(name);
  if (it == builtin_table().end()) return std::nullopt;
  return std::make_pair(it->second.arity, it->second.params);
}

std::vector<Gate> lower_builtin(std::string_view name, std::span<const double> params,
                                std::span<const Qubit> q) {
  using K = GateKind;
  auto h = [&](std::size_t i) { return params[i] / pi; };
  auto one = [&](K k) { return std::vector<Gate>{Gate(k, {q[0]})}; };
  auto rot = [&](K k) { return std::vector<Gate>{Gate(k, {q[0]}, {h(0)})}; };
  if (name == "id") return {};
  if (name == "x") return one(K::X);
  if (name == "y") return one(K::Y);
  if (name == "z") return one(K::Z);
  if (name == "h") return one(K::H);
  if (name == "s") return one(K::S);
  if (name == "sdg") return one(K::Sdg);
  if (name == "t") return one(K::T);
  if (name == "tdg") return one(K::Tdg);
  if (name == "rx") return rot(K::Rx);
  if (name == "ry") return rot(K::Ry);
  if (name == "rz" || name == "u1") return rot(K::Rz);
  if (name == "u2") return {Gate(K::TK1, {q[0]}, {h(0) + 0.5, 0.5, h(1) - 0.5})};
  if (name == "u3" || name == "U") return {Gate(K::TK1, {q[0]}, {h(1) + 0.5, h(0), h(2) - 0.5})};
  if (name == "cx" || name == "CX") return {Gate(K::CNOT, {q[0], q[1]})};
  if (name == "cz") return {Gate(K::CZ, {q[0], q[1]})};
  if (name == "cu1") return {Gate(K::CU1, {q[0], q[1]}, {h(0)})};
  if (name == "swap") return {Gate(K::SWAP, {q[0], q[1]})};
  if (name == "cry") return {Gate(K::CRy, {q[0], q[1]}, {h(0)})};
  if (name == "rzz") return {Gate(K::ZZ, {q[0], q[1]}, {h(0)})};
  if (name == "ccx") return rules::toffoli_network(q[0], q[1], q[2]);
  throw Error(ErrorCode::UnsupportedGate, "unsupported gate '" + std::string(name) + "'");
}

Matrix qelib_matrix(std::string_view name, std::span<const double> p) {
  if (name == "id") return Matrix::Identity(2, 2);
  if (name == "x") return mat2(0, 1, 1, 0);
  if (name == "y") return mat2(0, -kI, kI, 0);
  if (name == "z") return mat2(1, 0, 0, -1);
  if (name == "h") return mat2(1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), -1 / std::sqrt(2.0));
  if (name == "s") return mat2(1, 0, 0, kI);
  if (name == "sdg") return mat2(1, 0, 0, -kI);
  if (name == "t") return mat2(1, 0, 0, std::exp(kI * pi / 4.0));
  if (name == "tdg") return mat2(1, 0, 0, std::exp(-kI * pi / 4.0));
  if (name == "rx") return mat2(std::cos(p[0] / 2), -kI * std::sin(p[0] / 2), -kI * std::sin(p[0] / 2), std::cos(p[0] / 2));
  if (name == "ry") return mat2(std::cos(p[0] / 2), -std::sin(p[0] / 2), std::sin(p[0] / 2), std::cos(p[0] / 2));
  if (name == "rz") return mat2(std::exp(-kI * p[0] / 2.0), 0, 0, std::exp(kI * p[0] / 2.0));
  if (name == "u1") return u3(0, 0, p[0]);
  if (name == "u2") return u3(pi / 2, p[0], p[1]);
  if (name == "u3" || name == "U") return u3(p[0], p[1], p[2]);
  if (name == "cx" || name == "CX") return controlled(qelib_matrix("x", {}));
  if (name == "cz") return controlled(qelib_matrix("z", {}));
  if (name == "cu1") return controlled(u3(0, 0, p[0]));
  if (name == "cry") return controlled(qelib_matrix("ry", p));
  if (name == "swap") {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
    return m;
  }
  if (name == "rzz") {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(3, 3) = std::exp(-kI * p[0] / 2.0);
    m(1, 1) = m(2, 2) = std::exp(kI * p[0] / 2.0);
    return m;
  }
  if (name == "ccx") {
    Matrix m = Matrix::Identity(8, 8);
    m(3, 3) = m(7, 7) = 0.0;
    m(3, 7) = m(7, 3) = 1.0;
    return m;
  }
  throw Error(ErrorCode::UnsupportedGate, "unsupported gate '" + std::string(name) + "'");
}

Lowered lower(const Program& p, const LowerOptions& opts) {
  Lowerer lw(p);
  lw.run();
  const int declared = lw.declared();
  std::vector<Qubit> map(declared, -1);
  int n = 0;
  if (opts.drop_idle_qubits) {
    std::vector<bool> used(declared, false);
    for (const Gate& g : lw.emitted) {
      for (Qubit q : g.qubits()) used[q] = true;
    }
    for (int q = 0; q < declared; ++q) {
      if (used[q]) map[q] = n++;
    }
  } else {
    for (int q = 0; q < declared; ++q) map[q] = n++;
  }
  Lowered out{CircuitDag(std::max(n, 1)), lw.measures, lw.barriers, map};
  for (Gate g : lw.emitted) {
    for (std::size_t k = 0; k < g.arity(); ++k) g.q[k] = map[g.q[k]];
    out.dag.append(g);
  }
  return out;
}

Lowered load(std::string_view text, const LowerOptions& opts) { return lower(parse(text), opts); }

Lowered load_file(const std::string& path, const LowerOptions& opts) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load(ss.str(), opts);
}

}  // namespace ionc::qasm
