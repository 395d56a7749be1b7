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

#include <cctype>
#include <charconv>
#include <unordered_set>

#include "ionc/error.hpp"
#include "ionc/qasm.hpp"

namespace ionc::qasm {

namespace {

enum class Tok { Ident, Real, Int, String, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double number = 0.0;
  Position pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Position at{line_, col_};
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", 0.0, at});
        return out;
      }
      char c = src_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t b = i_;
        while (i_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
          advance();
        }
        out.push_back({Tok::Ident, std::string(src_.substr(b, i_ - b)), 0.0, at});
      } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && next_is_digit())) {
        out.push_back(number(at));
      } else if (c == '"') {
        advance();
        std::size_t b = i_;
        while (i_ < src_.size() && src_[i_] != '"' && src_[i_] != '\n') advance();
        if (i_ >= src_.size() || src_[i_] != '"') fail("unterminated string", at);
        std::string s(src_.substr(b, i_ - b));
        advance();
        out.push_back({Tok::String, s, 0.0, at});
      } else if ((c == '-' && peek(1) == '>') || (c == '=' && peek(1) == '=')) {
        std::string s(src_.substr(i_, 2));
        advance();
        advance();
        out.push_back({Tok::Symbol, s, 0.0, at});
      } else if (std::string_view(";,()[]{}+-*/^").find(c) != std::string_view::npos) {
        advance();
        out.push_back({Tok::Symbol, std::string(1, c), 0.0, at});
      } else {
        fail(std::string("unexpected character '") + c + "'", at);
      }
    }
  }

 private:
  [[noreturn]] static void fail(const std::string& m, Position p) {
    throw ParseError(ErrorCode::Parse, m, p.line, p.column);
  }

  char peek(std::size_t k) const { return i_ + k < src_.size() ? src_[i_ + k] : '\0'; }
  bool next_is_digit() const { return std::isdigit(static_cast<unsigned char>(peek(1))) != 0; }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        Position at{line_, col_};
        advance();
        advance();
        while (i_ < src_.size() && !(src_[i_] == '*' && peek(1) == '/')) advance();
        if (i_ >= src_.size()) fail("unterminated comment", at);
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  Token number(Position at) {
    std::size_t b = i_;
    bool real = false;
    while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) advance();
    if (i_ < src_.size() && src_[i_] == '.') {
      real = true;
      advance();
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) advance();
    }
    if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
      std::size_t save = i_;
      int sl = line_, sc = col_;
      advance();
      if (i_ < src_.size() && (src_[i_] == '+' || src_[i_] == '-')) advance();
      if (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
        real = true;
        while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) advance();
      } else {
        i_ = save;
        line_ = sl;
        col_ = sc;
      }
    }
    std::string text(src_.substr(b, i_ - b));
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc()) fail("bad number '" + text + "'", at);
    return {real ? Tok::Real : Tok::Int, text, v, at};
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  Program run() {
    Program p;
    if (is_ident("OPENQASM")) {
      next();
      const Token& v = cur();
      if (v.kind != Tok::Real && v.kind != Tok::Int) fail("expected version number");
      p.version = v.text;
      if (p.version != "2.0" && p.version != "2") {
        throw ParseError(ErrorCode::UnsupportedFeature, "only OpenQASM 2.0 is supported", v.pos.line,
                         v.pos.column);
      }
      next();
      expect(";");
    }
    while (cur().kind != Tok::End) statement(p);
    return p;
  }

 private:
  const Token& cur() const { return t_[k_]; }
  void next() {
    if (k_ + 1 < t_.size()) ++k_;
  }
  bool is_ident(std::string_view s) const { return cur().kind == Tok::Ident && cur().text == s; }
  bool is_sym(std::string_view s) const { return cur().kind == Tok::Symbol && cur().text == s; }

  [[noreturn]] void fail(const std::string& m) const {
    throw ParseError(ErrorCode::Parse, m, cur().pos.line, cur().pos.column);
  }
  [[noreturn]] void unsupported(const std::string& m) const {
    throw ParseError(ErrorCode::UnsupportedFeature, m, cur().pos.line, cur().pos.column);
  }

  void expect(std::string_view s) {
    if (!is_sym(s)) {
      fail("expected '" + std::string(s) + "'" +
           (cur().kind == Tok::End ? " before end of input" : " near '" + cur().text + "'"));
    }
    next();
  }

  std::string ident() {
    if (cur().kind != Tok::Ident) fail("expected identifier");
    std::string s = cur().text;
    next();
    return s;
  }

  int integer() {
    if (cur().kind != Tok::Int) fail("expected integer");
    int v = static_cast<int>(cur().number);
    next();
    return v;
  }

  void statement(Program& p) {
    Position at = cur().pos;
    if (cur().kind != Tok::Ident) fail("expected statement");
    const std::string kw = cur().text;
    if (kw == "include") {
      next();
      if (cur().kind != Tok::String) fail("expected file name");
      if (cur().text != "qelib1.inc") unsupported("only qelib1.inc can be included");
      next();
      expect(";");
    } else if (kw == "qreg" || kw == "creg") {
      next();
      Register r;
      r.pos = at;
      r.name = ident();
      expect("[");
      r.size = integer();
      expect("]");
      expect(";");
      if (r.size < 1) throw ParseError(ErrorCode::Parse, "register size must be positive", at.line, at.column);
      for (const auto* regs : {&p.qregs, &p.cregs}) {
        for (const Register& o : *regs) {
          if (o.name == r.name) {
            throw ParseError(ErrorCode::Parse, "register '" + r.name + "' redeclared", at.line, at.column);
          }
        }
      }
      (kw == "qreg" ? p.qregs : p.cregs).push_back(r);
    } else if (kw == "gate") {
      next();
      p.gates.push_back(gate_def(at));
    } else if (kw == "opaque") {
      unsupported("opaque gates are not supported");
    } else if (kw == "if") {
      unsupported("classically controlled gates are not supported");
    } else if (kw == "reset") {
      unsupported("reset is not supported");
    } else if (kw == "measure") {
      next();
      Measure m;
      m.pos = at;
      m.qubit = argument();
      expect("->");
      m.bit = argument();
      expect(";");
      p.statements.emplace_back(m);
    } else if (kw == "barrier") {
      next();
      Barrier b;
      b.pos = at;
      b.args = arguments();
      expect(";");
      p.statements.emplace_back(b);
    } else {
      GateCall g = gate_call();
      expect(";");
      p.statements.emplace_back(std::move(g));
    }
  }

  GateDef gate_def(Position at) {
    GateDef d;
    d.pos = at;
    d.name = ident();
    if (is_sym("(")) {
      next();
      if (!is_sym(")")) {
        d.params.push_back(ident());
        while (is_sym(",")) {
          next();
          d.params.push_back(ident());
        }
      }
      expect(")");
    }
    d.qubits.push_back(ident());
    while (is_sym(",")) {
      next();
      d.qubits.push_back(ident());
    }
    expect("{");
    while (!is_sym("}")) {
      if (cur().kind == Tok::End) fail("unterminated gate body");
      if (is_ident("barrier")) {
        next();
        arguments();
        expect(";");
        continue;
      }
      if (is_ident("measure") || is_ident("reset") || is_ident("if") || is_ident("gate")) {
        fail("'" + cur().text + "' is not allowed inside a gate body");
      }
      GateCall g = gate_call();
      for (const Argument& a : g.args) {
        if (a.index) throw ParseError(ErrorCode::Parse, "indexed argument inside a gate body", a.pos.line, a.pos.column);
        bool known = false;
        for (const auto& q : d.qubits) known = known || q == a.reg;
        if (!known) {
          throw ParseError(ErrorCode::Parse, "unknown gate argument '" + a.reg + "'", a.pos.line, a.pos.column);
        }
      }
      expect(";");
      d.body.push_back(std::move(g));
    }
    expect("}");
    return d;
  }

  GateCall gate_call() {
    GateCall g;
    g.pos = cur().pos;
    g.name = ident();
    if (is_sym("(")) {
      next();
      if (!is_sym(")")) {
        g.params.push_back(expr());
        while (is_sym(",")) {
          next();
          g.params.push_back(expr());
        }
      }
      expect(")");
    }
    g.args = arguments();
    return g;
  }

  std::vector<Argument> arguments() {
    std::vector<Argument> out{argument()};
    while (is_sym(",")) {
      next();
      out.push_back(argument());
    }
    return out;
  }

  Argument argument() {
    Argument a;
    a.pos = cur().pos;
    a.reg = ident();
    if (is_sym("[")) {
      next();
      a.index = integer();
      expect("]");
    }
    return a;
  }

  ExprPtr make(Expr::Op op, Position pos, std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->pos = pos;
    e->args = std::move(args);
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (is_sym("+") || is_sym("-")) {
      Position at = cur().pos;
      Expr::Op op = is_sym("+") ? Expr::Op::Add : Expr::Op::Sub;
      next();
      lhs = make(op, at, {lhs, term()});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (is_sym("*") || is_sym("/")) {
      Position at = cur().pos;
      Expr::Op op = is_sym("*") ? Expr::Op::Mul : Expr::Op::Div;
      next();
      lhs = make(op, at, {lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (is_sym("-")) {
      Position at = cur().pos;
      next();
      return make(Expr::Op::Neg, at, {unary()});
    }
    if (is_sym("+")) {
      next();
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (is_sym("^")) {
      Position at = cur().pos;
      next();
      return make(Expr::Op::Pow, at, {base, unary()});
    }
    return base;
  }

  ExprPtr primary() {
    Position at = cur().pos;
    if (cur().kind == Tok::Int || cur().kind == Tok::Real) {
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::Number;
      e->value = cur().number;
      e->pos = at;
      next();
      return e;
    }
    if (is_sym("(")) {
      next();
      ExprPtr e = expr();
      expect(")");
      return e;
    }
    if (cur().kind == Tok::Ident) {
      std::string name = ident();
      if (name == "pi") return make(Expr::Op::Pi, at);
      static const std::unordered_set<std::string> kFuncs{"sin", "cos", "tan", "exp", "ln", "sqrt"};
      if (kFuncs.count(name) && is_sym("(")) {
        next();
        ExprPtr arg = expr();
        expect(")");
        auto e = std::make_shared<Expr>();
        e->op = Expr::Op::Call;
        e->name = name;
        e->args = {arg};
        e->pos = at;
        return e;
      }
      auto e = std::make_shared<Expr>();
      e->op = Expr::Op::Param;
      e->name = name;
      e->pos = at;
      return e;
    }
    fail("expected expression");
  }

  std::vector<Token> t_;
  std::size_t k_ = 0;
};

}  // namespace

Program parse(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace ionc::qasm
