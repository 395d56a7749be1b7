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

#include <deque>

#include "ionc/error.hpp"
#include "ionc/native.hpp"
#include "ionc/passes.hpp"

namespace ionc {

PassResult PassTally::finish(bool changed) const {
  PassResult r;
  std::size_t after = c_.gate_count();
  r.changed = changed || after != before_;
  if (after < before_) r.gates_removed = before_ - after;
  if (after > before_) r.gates_added = after - before_;
  return r;
}

namespace {

using K = GateKind;

bool is_identity(const Gate& g) {
  switch (g.kind) {
    case K::R:
    case K::Rz:
    case K::Rx:
    case K::Ry:
    case K::ZZ:
    case K::CU1:
    case K::CRy:
      return g.p[0].is_zero();
    case K::TK1:
      return g.p[1].is_zero() && (g.p[0] + g.p[2]).is_zero();
    default:
      return false;
  }
}

bool is_x_axis(const Gate& g) {
  return g.kind == K::Rx || g.kind == K::X || (g.kind == K::R && g.p[1].is_pi_multiple());
}

bool is_y_axis(const Gate& g) {
  return g.kind == K::Ry || g.kind == K::Y ||
         (g.kind == K::R && (g.p[1].near(0.5) || g.p[1].near(1.5)));
}

bool is_diagonal_pair(GateKind k) { return k == K::ZZ || k == K::CZ || k == K::CU1; }

// Whether single-qubit `s` on subnode `port` of `m` can move from after `m`
// to before it.
bool commutes_back(const Gate& s, const Gate& m, int port) {
  if (is_z_diagonal(s.kind)) {
    if (is_diagonal_pair(m.kind)) return true;
    if (m.kind == K::CNOT || m.kind == K::CRy) return port == 0;
    if (m.kind == K::CCX) return port < 2;
    return false;
  }
  if (is_x_axis(s)) {
    if (m.kind == K::CNOT) return port == 1;
    if (m.kind == K::CCX) return port == 2;
    return false;
  }
  if (is_y_axis(s)) return m.kind == K::CRy && port == 1;
  return false;
}

bool same_qubit_set(const Gate& a, const Gate& b) {
  if (a.arity() != b.arity()) return false;
  for (Qubit q : a.qubits()) {
    if (!b.acts_on(q)) return false;
  }
  return true;
}

bool same_qubit_order(const Gate& a, const Gate& b) {
  if (a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.q[i] != b.q[i]) return false;
  }
  return true;
}

bool pulse_allowed(Angle a) { return a.is_zero() || a.near(0.5) || a.near(1.0); }

enum class Outcome { None, Cancel, Merge };

struct Rewrite {
  Outcome outcome = Outcome::None;
  Angle sum;
};

bool inverse_pair(GateKind a, GateKind b) {
  switch (a) {
    case K::X:
    case K::Y:
    case K::Z:
    case K::H:
      return a == b;
    case K::S: return b == K::Sdg;
    case K::Sdg: return b == K::S;
    case K::T: return b == K::Tdg;
    case K::Tdg: return b == K::T;
    default: return false;
  }
}

Rewrite merge_angles(const Gate& a, const Gate& b, bool pulse_limited, const RedundancyOptions& opts) {
  Angle s = a.p[0] + b.p[0];
  if (s.is_zero()) return {Outcome::Cancel, s};
  if (opts.restricted && pulse_limited && !pulse_allowed(s)) return {};
  return {Outcome::Merge, s};
}

// `a` directly precedes `b` on every wire of `a`.
Rewrite pair_rewrite(const Gate& a, const Gate& b, const RedundancyOptions& opts) {
  if (a.single_qubit()) {
    if (inverse_pair(a.kind, b.kind)) return {Outcome::Cancel, {}};
    if (a.kind != b.kind) return {};
    switch (a.kind) {
      case K::Rz: return merge_angles(a, b, false, opts);
      case K::Rx:
      case K::Ry: return merge_angles(a, b, true, opts);
      case K::R:
        if (!a.p[1].near(b.p[1])) return {};
        return merge_angles(a, b, true, opts);
      default: return {};
    }
  }
  if (a.kind != b.kind) return {};
  switch (a.kind) {
    case K::CNOT:
    case K::CCX:
      if (a.q[a.arity() - 1] == b.q[b.arity() - 1] && same_qubit_set(a, b)) return {Outcome::Cancel, {}};
      return {};
    case K::CZ:
    case K::SWAP:
      return same_qubit_set(a, b) ? Rewrite{Outcome::Cancel, {}} : Rewrite{};
    case K::ZZ:
    case K::CU1:
      return same_qubit_set(a, b) ? merge_angles(a, b, false, opts) : Rewrite{};
    case K::CRy:
      return same_qubit_order(a, b) ? merge_angles(a, b, false, opts) : Rewrite{};
    default:
      return {};
  }
}

// The gate directly after `id` on all of its wires, if it is the same gate.
std::optional<GateId> common_successor(const CircuitDag& c, GateId id) {
  const Gate& g = c.gate(id);
  std::optional<GateId> nx = c.next_gate(id, g.q[0]);
  if (!nx) return std::nullopt;
  for (std::size_t k = 1; k < g.arity(); ++k) {
    if (c.next_gate(id, g.q[k]) != nx) return std::nullopt;
  }
  if (c.gate(*nx).arity() != g.arity()) return std::nullopt;
  return nx;
}

class Worklist {
 public:
  explicit Worklist(const CircuitDag& c) : c_(c) {
    for (GateId id : c.execution_order()) push(id);
  }

  void push(GateId id) {
    if (id >= queued_.size()) queued_.resize(c_.next_id() + 1, 0);
    if (queued_[id]) return;
    queued_[id] = 1;
    q_.push_back(id);
  }

  void push_neighbors(GateId id) {
    const Gate& g = c_.gate(id);
    for (Qubit q : g.qubits()) {
      if (auto p = c_.prev_gate(id, q)) push(*p);
      if (auto n = c_.next_gate(id, q)) push(*n);
    }
  }

  void push_prev(GateId id) {
    const Gate& g = c_.gate(id);
    for (Qubit q : g.qubits()) {
      if (auto p = c_.prev_gate(id, q)) push(*p);
    }
  }

  bool empty() const { return q_.empty(); }

  GateId pop() {
    GateId id = q_.front();
    q_.pop_front();
    queued_[id] = 0;
    return id;
  }

 private:
  const CircuitDag& c_;
  std::deque<GateId> q_;
  std::vector<char> queued_;
};

}  // namespace

PassResult eliminate_swaps(CircuitDag& c) {
  PassTally tally(c);
  bool changed = false;
  for (GateId id : c.execution_order()) {
    if (c.contains(id) && c.gate(id).kind == K::SWAP) {
      c.eliminate_swap(id);
      changed = true;
    }
  }
  return tally.finish(changed);
}

PassResult remove_redundancies(CircuitDag& c, const RedundancyOptions& opts) {
  PassTally tally(c);
  bool changed = false;
  Worklist work(c);
  while (!work.empty()) {
    GateId id = work.pop();
    if (!c.contains(id)) continue;
    const Gate g = c.gate(id);
    if (is_identity(g)) {
      work.push_neighbors(id);
      c.remove(id);
      changed = true;
      continue;
    }
    auto nx = common_successor(c, id);
    if (!nx) continue;
    Rewrite rw = pair_rewrite(g, c.gate(*nx), opts);
    if (rw.outcome == Outcome::None) continue;
    changed = true;
    if (rw.outcome == Outcome::Cancel) {
      work.push_prev(id);
      for (Qubit q : c.gate(*nx).qubits()) {
        if (auto n = c.next_gate(*nx, q)) work.push(*n);
      }
      c.remove(*nx);
      c.remove(id);
    } else {
      c.set_param(id, 0, rw.sum);
      c.remove(*nx);
      work.push(id);
      work.push_prev(id);
    }
  }
  return tally.finish(changed);
}

PassResult commute_through_multis(CircuitDag& c) {
  PassTally tally(c);
  bool changed = false;
  for (GateId id : c.execution_order()) {
    const Gate& g = c.gate(id);
    if (!g.single_qubit()) continue;
    Qubit q = g.q[0];
    std::optional<GateId> target;
    for (auto p = c.prev_gate(id, q); p; p = c.prev_gate(*p, q)) {
      const Gate& m = c.gate(*p);
      if (m.single_qubit() || !commutes_back(g, m, m.port_of(q))) break;
      target = p;
    }
    if (target) {
      c.move_before(id, *target);
      changed = true;
    }
  }
  return tally.finish(changed);
}

PassResult reduce_fixpoint(CircuitDag& c, const RedundancyOptions& opts) {
  PassTally tally(c);
  PassResult r = remove_redundancies(c, opts);
  bool changed = r.changed;
  for (;;) {
    changed = commute_through_multis(c).changed || changed;
    PassResult round = remove_redundancies(c, opts);
    if (round.gates_removed == 0) break;
    changed = true;
  }
  return tally.finish(changed);
}

PassResult match_macros(CircuitDag& c, std::span<const Macro> macros) {
  PassTally tally(c);
  bool changed = false;
  bool cry = false;
  for (Macro m : macros) cry = cry || m == Macro::CRy;
  if (cry) {
    const DecompositionRule& rule = find_rule("cry_macro");
    for (GateId id : c.execution_order()) {
      const Gate g = c.gate(id);
      if (g.kind != K::CRy || g.p[0].is_zero()) continue;
      if (auto rhs = apply_rule(rule, g)) {
        c.splice(id, *rhs);
        changed = true;
      }
    }
  }
  changed = reduce_fixpoint(c).changed || changed;
  return tally.finish(changed);
}

PassResult squash_single_qubit_runs(CircuitDag& c) {
  PassTally tally(c);
  bool changed = false;
  for (Qubit q = 0; q < c.n(); ++q) {
    std::vector<GateId> wire = c.wire_gates(q);
    std::size_t i = 0;
    while (i < wire.size()) {
      if (!c.gate(wire[i]).single_qubit()) {
        ++i;
        continue;
      }
      std::size_t j = i;
      Matrix2 u = Matrix2::Identity();
      while (j < wire.size() && c.gate(wire[j]).single_qubit()) {
        u = single_qubit_matrix(c.gate(wire[j])) * u;
        ++j;
      }
      auto angles = zxz_angles(u);
      if (!angles) {
        for (std::size_t k = i; k < j; ++k) c.remove(wire[k]);
        changed = true;
      } else if (j - i > 1 || c.gate(wire[i]).kind != K::TK1) {
        std::array<Angle, 3> ps{angles->alpha, angles->beta, angles->gamma};
        std::array<Qubit, 1> qs{q};
        for (std::size_t k = i + 1; k < j; ++k) c.remove(wire[k]);
        c.splice(wire[i], {Gate(K::TK1, qs, ps)});
        changed = true;
      }
      i = j;
    }
  }
  return tally.finish(changed);
}

PassResult expand_tk1(CircuitDag& c) {
  PassTally tally(c);
  bool changed = false;
  for (GateId id : c.execution_order()) {
    const Gate g = c.gate(id);
    if (g.kind != K::TK1) continue;
    c.splice(id, rules::tk1_expand(g.q[0], g.p[0], g.p[1], g.p[2]));
    changed = true;
  }
  return tally.finish(changed);
}

namespace {

// Rewrites a network element (single-qubit gate or CNOT) into {Rx, Rz, ZZ}.
void append_native(const Gate& h, std::vector<Gate>& out) {
  if (h.single_qubit()) {
    for (const Gate& t : rules::to_tk1(h)) {
      for (const Gate& e : rules::tk1_expand(t.q[0], t.p[0], t.p[1], t.p[2])) out.push_back(e);
    }
  } else if (h.kind == K::CNOT) {
    for (const Gate& e : rules::cnot_to_zz(h.q[0], h.q[1])) out.push_back(e);
  } else if (h.kind == K::ZZ) {
    if (h.p[0].is_half_pi_multiple()) {
      out.push_back(h);
    } else {
      for (const Gate& e : rules::zz_to_half_pi(h.q[0], h.q[1], h.p[0])) out.push_back(e);
    }
  } else {
    auto net = rules::to_cnot_network(h);
    if (!net) throw Error(ErrorCode::UnsupportedGate, "no lowering template for " + h.to_string());
    for (const Gate& e : *net) append_native(e, out);
  }
}

bool is_native_rebased(const Gate& g) {
  return g.kind == K::Rx || g.kind == K::Rz || (g.kind == K::ZZ && g.p[0].is_half_pi_multiple());
}

}  // namespace

PassResult rebase_to_M(CircuitDag& c) {
  PassTally tally(c);
  bool changed = false;
  for (GateId id : c.execution_order()) {
    const Gate g = c.gate(id);
    if (g.kind == K::ZZ && !g.p[0].is_half_pi_multiple()) {
      c.splice(id, rules::zz_to_half_pi(g.q[0], g.q[1], g.p[0]));
      changed = true;
    }
  }
  changed = reduce_fixpoint(c).changed || changed;
  changed = squash_single_qubit_runs(c).changed || changed;
  for (GateId id : c.execution_order()) {
    const Gate g = c.gate(id);
    if (is_native_rebased(g)) continue;
    std::vector<Gate> out;
    if (g.kind == K::TK1) {
      out = rules::tk1_expand(g.q[0], g.p[0], g.p[1], g.p[2]);
    } else {
      append_native(g, out);
    }
    c.splice(id, out);
    changed = true;
  }
  return tally.finish(changed);
}

PassResult rebase_naive(CircuitDag& c) {
  PassTally tally(c);
  bool changed = false;
  for (GateId id : c.execution_order()) {
    const Gate g = c.gate(id);
    if (g.kind == K::ZZ && g.p[0].is_half_pi_multiple()) continue;
    std::vector<Gate> out;
    append_native(g, out);
    c.splice(id, out);
    changed = true;
  }
  return tally.finish(changed);
}

PassResult merge_rz_through_zz(CircuitDag& c, const RedundancyOptions&) {
  PassTally tally(c);
  bool changed = false;
  for (GateId id : c.execution_order()) {
    if (!c.contains(id) || c.gate(id).kind != K::Rz) continue;
    const Qubit q = c.gate(id).q[0];
    std::optional<GateId> earliest;
    std::optional<GateId> p = c.prev_gate(id, q);
    while (p && is_diagonal_pair(c.gate(*p).kind)) {
      earliest = p;
      p = c.prev_gate(*p, q);
    }
    if (!earliest) continue;
    changed = true;
    if (p && c.gate(*p).kind == K::Rz) {
      Angle sum = c.gate(*p).p[0] + c.gate(id).p[0];
      c.remove(id);
      if (sum.is_zero()) {
        c.remove(*p);
      } else {
        c.set_param(*p, 0, sum);
      }
    } else {
      c.move_before(id, *earliest);
    }
  }
  return tally.finish(changed);
}

PassResult build_rx_rz_sequences(CircuitDag& c) {
  PassTally tally(c);
  bool changed = squash_single_qubit_runs(c).changed;
  changed = expand_tk1(c).changed || changed;
  for (;;) {
    std::size_t before = c.gate_count();
    changed = merge_rz_through_zz(c).changed || changed;
    changed = reduce_fixpoint(c).changed || changed;
    if (c.gate_count() >= before) break;
  }
  return tally.finish(changed);
}

PassResult restrict_rx_only(CircuitDag& c) {
  PassTally tally(c);
  bool changed = false;
  for (GateId id : c.execution_order()) {
    const Gate g = c.gate(id);
    if (g.kind != K::Rx || g.p[0].near(0.5) || g.p[0].near(1.0)) continue;
    c.splice(id, rules::rx_restriction(g.q[0], g.p[0]));
    changed = true;
  }
  return tally.finish(changed);
}

PassResult restrict_single_qubit_angles(CircuitDag& c) {
  PassTally tally(c);
  bool changed = restrict_rx_only(c).changed;
  const RedundancyOptions restricted{true};
  for (;;) {
    std::size_t before = c.gate_count();
    changed = merge_rz_through_zz(c, restricted).changed || changed;
    changed = reduce_fixpoint(c, restricted).changed || changed;
    if (c.gate_count() >= before) break;
  }
  return tally.finish(changed);
}

std::size_t zz_count(const CircuitDag& c) {
  std::size_t n = 0;
  for (GateId id : c.execution_order()) n += c.gate(id).kind == K::ZZ;
  return n;
}

}  // namespace ionc
