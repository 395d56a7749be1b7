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

#include <algorithm>
#include <set>
#include <unordered_map>

#include "ionc/error.hpp"
#include "ionc/ion.hpp"
#include "ionc/native.hpp"

namespace ionc {

namespace {

using K = GateKind;

constexpr int kNone = -1;

}  // namespace

PassResult phase_tracking(CircuitDag& c, bool drop_terminal_rz) {
  PassTally tally(c);
  bool changed = false;
  for (GateId id : c.execution_order()) {
    const Gate& g = c.gate(id);
    if (g.kind == K::Rx || g.kind == K::Ry) {
      std::array<Angle, 2> ps{g.p[0], Angle(g.kind == K::Rx ? 0.0 : 0.5)};
      c.update(id, K::R, ps);
      changed = true;
    }
  }
  for (Qubit q = 0; q < c.n(); ++q) {
    Angle b;
    for (GateId id : c.wire_gates(q)) {
      const Gate& g = c.gate(id);
      if (!g.single_qubit()) continue;
      if (g.kind == K::R) {
        if (!b.is_zero()) {
          c.set_param(id, 1, g.p[1] - b);
          changed = true;
        }
      } else if (g.kind == K::Rz) {
        b += g.p[0];
        c.remove(id);
        changed = true;
      } else {
        throw Error(ErrorCode::PassOrder, "phase tracking expects R or Rz, found " + g.to_string());
      }
    }
    if (!drop_terminal_rz && !b.is_zero()) c.append(Gate(K::Rz, {q}, {b.half_turns()}));
  }
  return tally.finish(changed);
}

namespace {

// Which unit owns a gate: a block (`block` >= 0) or a blockless sequence.
struct Owner {
  int block = kNone;
  int seq = kNone;
};

class OwnerMap {
 public:
  OwnerMap(const CircuitDag& c, const BlockPartition& part) : owners_(c.next_id()) {
    for (std::size_t b = 0; b < part.blocks.size(); ++b) assign_block(part.blocks[b], static_cast<int>(b));
    for (std::size_t s = 0; s < part.blockless.size(); ++s) assign_seq(part.blockless[s], static_cast<int>(s));
  }

  void assign_block(const Block& blk, int b) {
    at(blk.zz) = {b, kNone};
    for (auto [x, y] : blk.p) at(x) = at(y) = {b, kNone};
    for (auto [x, y] : blk.s) at(x) = at(y) = {b, kNone};
  }

  void assign_seq(const BlocklessSequence& seq, int s) {
    for (GateId g : seq.gates) at(g) = {kNone, s};
  }

  Owner& at(GateId id) {
    if (id >= owners_.size()) owners_.resize(id + 1);
    return owners_[id];
  }

 private:
  std::vector<Owner> owners_;
};

// Index (0 or 1) of `q` among the anchor's qubits.
int side_of(const CircuitDag& c, const Block& b, Qubit q) { return c.gate(b.zz).q[0] == q ? 0 : 1; }

GateId half(const std::pair<GateId, GateId>& pr, int side) { return side == 0 ? pr.first : pr.second; }

std::pair<GateId, GateId> oriented(GateId on_first, GateId on_second, int side_of_first) {
  return side_of_first == 0 ? std::pair{on_first, on_second} : std::pair{on_second, on_first};
}

GateId first_on(const Block& b, int side) { return b.p.empty() ? b.zz : half(b.p.front(), side); }

GateId last_on(const Block& b, int side) { return b.s.empty() ? b.zz : half(b.s.back(), side); }

bool same_gates(const CircuitDag& c, const std::vector<GateId>& a, const std::vector<GateId>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!same_action(c.gate(a[k]), c.gate(b[k]))) return false;
  }
  return true;
}

void compact(BlockPartition& part) {
  auto& v = part.blockless;
  v.erase(std::remove_if(v.begin(), v.end(), [](const BlocklessSequence& s) { return s.gates.empty(); }), v.end());
}

}  // namespace

BlockPartition build_blocks(const CircuitDag& c) {
  BlockPartition part;
  std::vector<char> claimed(c.next_id(), 0);
  for (GateId id : c.execution_order()) {
    const Gate& zz = c.gate(id);
    if (zz.single_qubit()) continue;
    if (zz.kind != K::ZZ) throw Error(ErrorCode::PassOrder, "block building expects ZZ, found " + zz.to_string());
    Block blk;
    blk.zz = id;
    claimed[id] = 1;
    const Qubit a = zz.q[0];
    const Qubit b = zz.q[1];
    auto matches = [&](std::optional<GateId> x, std::optional<GateId> y) {
      return x && y && c.gate(*x).single_qubit() && c.gate(*y).single_qubit() && !claimed[*x] && !claimed[*y] &&
             same_action(c.gate(*x), c.gate(*y));
    };
    for (auto x = c.prev_gate(id, a), y = c.prev_gate(id, b); matches(x, y);
         x = c.prev_gate(*x, a), y = c.prev_gate(*y, b)) {
      blk.p.emplace_back(*x, *y);
      claimed[*x] = claimed[*y] = 1;
    }
    std::reverse(blk.p.begin(), blk.p.end());
    for (auto x = c.next_gate(id, a), y = c.next_gate(id, b); matches(x, y);
         x = c.next_gate(*x, a), y = c.next_gate(*y, b)) {
      blk.s.emplace_back(*x, *y);
      claimed[*x] = claimed[*y] = 1;
    }
    part.blocks.push_back(std::move(blk));
  }
  for (Qubit q = 0; q < c.n(); ++q) {
    BlocklessSequence cur{q, {}};
    for (GateId id : c.wire_gates(q)) {
      if (!claimed[id]) {
        cur.gates.push_back(id);
      } else if (!cur.gates.empty()) {
        part.blockless.push_back(std::move(cur));
        cur = {q, {}};
      }
    }
    if (!cur.gates.empty()) part.blockless.push_back(std::move(cur));
  }
  return part;
}

void check_partition(const CircuitDag& c, const BlockPartition& part) {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::InvalidArgument, "partition: " + m); };
  std::vector<int> seen(c.next_id(), 0);
  std::vector<char> in_seq(c.next_id(), 0);
  auto mark = [&](GateId id) {
    if (!c.contains(id)) fail("unknown gate " + std::to_string(id));
    if (seen[id]++) fail("gate " + std::to_string(id) + " listed twice");
  };
  for (const Block& b : part.blocks) {
    mark(b.zz);
    const Gate& zz = c.gate(b.zz);
    if (zz.kind != K::ZZ) fail("anchor is not ZZ");
    for (int side = 0; side < 2; ++side) {
      Qubit q = zz.q[side];
      GateId cur = b.zz;
      for (auto it = b.p.rbegin(); it != b.p.rend(); ++it) {
        GateId h = half(*it, side);
        if (c.prev_gate(cur, q) != h) fail("predecessor chain broken at " + std::to_string(h));
        cur = h;
      }
      cur = b.zz;
      for (const auto& pr : b.s) {
        GateId h = half(pr, side);
        if (c.next_gate(cur, q) != h) fail("successor chain broken at " + std::to_string(h));
        cur = h;
      }
    }
    for (const auto* list : {&b.p, &b.s}) {
      for (auto [x, y] : *list) {
        mark(x);
        mark(y);
        if (!c.gate(x).single_qubit() || !same_action(c.gate(x), c.gate(y))) fail("unmatched pair");
      }
    }
  }
  for (const BlocklessSequence& s : part.blockless) {
    if (s.gates.empty()) fail("empty blockless sequence");
    for (std::size_t k = 0; k < s.gates.size(); ++k) {
      GateId id = s.gates[k];
      mark(id);
      in_seq[id] = 1;
      const Gate& g = c.gate(id);
      if (!g.single_qubit() || g.q[0] != s.qubit) fail("sequence gate off its wire");
      if (k > 0 && c.prev_gate(id, s.qubit) != s.gates[k - 1]) fail("sequence not contiguous");
    }
  }
  for (const BlocklessSequence& s : part.blockless) {
    auto before = c.prev_gate(s.gates.front(), s.qubit);
    auto after = c.next_gate(s.gates.back(), s.qubit);
    if ((before && in_seq[*before]) || (after && in_seq[*after])) fail("sequence not maximal");
  }
  for (GateId id : c.execution_order()) {
    if (!seen[id]) fail("gate " + std::to_string(id) + " not covered");
  }
}

PassResult rearrange_blocks(const CircuitDag& c, BlockPartition& part) {
  PassTally tally(c);
  OwnerMap own(c, part);
  auto& blocks = part.blocks;
  auto& seqs = part.blockless;
  bool changed = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t ai = 0; ai < blocks.size(); ++ai) {
      for (int side_i = 0; side_i < 2; ++side_i) {
        Block& alpha = blocks[ai];
        const Gate& za = c.gate(alpha.zz);
        const int side_j = 1 - side_i;
        const Qubit qi = za.q[side_i];
        const Qubit qj = za.q[side_j];
        auto x = c.prev_gate(first_on(alpha, side_i), qi);
        auto y = c.prev_gate(first_on(alpha, side_j), qj);
        if (!x || !y) continue;
        const int mu = own.at(*x).seq;
        const int bi = own.at(*y).block;
        if (mu == kNone || bi == kNone || bi == static_cast<int>(ai)) continue;
        Block& beta = blocks[bi];
        const std::vector<GateId> b_mu = seqs[mu].gates;
        const std::size_t len = b_mu.size();
        if (beta.s.size() < len) continue;
        const int bj = side_of(c, beta, qj);
        const Qubit qk = c.gate(beta.zz).q[1 - bj];
        if (qk == qi) continue;
        std::vector<GateId> s_e_j, b_nu;
        for (std::size_t t = beta.s.size() - len; t < beta.s.size(); ++t) {
          s_e_j.push_back(half(beta.s[t], bj));
          b_nu.push_back(half(beta.s[t], 1 - bj));
        }
        if (s_e_j.back() != *y || !same_gates(c, b_mu, s_e_j)) continue;
        // The orphaned tail on qk, extended by the blockless run after it.
        int nu_tail = kNone;
        auto n = c.next_gate(b_nu.back(), qk);
        if (n && own.at(*n).seq != kNone) {
          nu_tail = own.at(*n).seq;
          for (GateId g : seqs[nu_tail].gates) b_nu.push_back(g);
          n = c.next_gate(b_nu.back(), qk);
        }
        if (!n || own.at(*n).block == kNone) continue;
        const int gi = own.at(*n).block;
        Block& gamma = blocks[gi];
        const int gk = side_of(c, gamma, qk);
        if (first_on(gamma, gk) != *n) continue;
        const Qubit ql = c.gate(gamma.zz).q[1 - gk];
        auto z = c.prev_gate(first_on(gamma, 1 - gk), ql);
        if (!z || own.at(*z).seq == kNone) continue;
        const int xi = own.at(*z).seq;
        if (xi == mu || xi == nu_tail) continue;
        auto& b_xi = seqs[xi].gates;
        if (b_xi.size() < b_nu.size()) continue;
        const std::vector<GateId> xi_e(b_xi.end() - static_cast<std::ptrdiff_t>(b_nu.size()), b_xi.end());
        if (!same_gates(c, b_nu, xi_e)) continue;

        std::vector<std::pair<GateId, GateId>> front_a, front_g;
        for (std::size_t t = 0; t < len; ++t) front_a.push_back(oriented(b_mu[t], s_e_j[t], side_i));
        for (std::size_t t = 0; t < b_nu.size(); ++t) front_g.push_back(oriented(b_nu[t], xi_e[t], gk));
        alpha.p.insert(alpha.p.begin(), front_a.begin(), front_a.end());
        beta.s.resize(beta.s.size() - len);
        gamma.p.insert(gamma.p.begin(), front_g.begin(), front_g.end());
        b_xi.resize(b_xi.size() - b_nu.size());
        for (GateId g : b_xi) own.at(g) = {kNone, xi};
        seqs[mu].gates.clear();
        if (nu_tail != kNone) seqs[nu_tail].gates.clear();
        own.assign_block(alpha, static_cast<int>(ai));
        own.assign_block(blocks[gi], gi);
        changed = progress = true;
      }
    }
  }
  compact(part);
  return tally.finish(changed);
}

namespace {

// Merges R gate `id` into its neighbor `other` when both share the phase and
// the summed pulse area is pi. Returns true on merge (`id` removed).
bool merge_halves(CircuitDag& c, GateId id, std::optional<GateId> other) {
  if (!other) return false;
  const Gate& g = c.gate(id);
  const Gate& o = c.gate(*other);
  if (o.kind != K::R || !o.p[1].near(g.p[1]) || !(o.p[0] + g.p[0]).near(1.0)) return false;
  c.set_param(*other, 0, Angle(1.0));
  c.remove(id);
  return true;
}

}  // namespace

PassResult split_angles(CircuitDag& c, BlockPartition& part) {
  PassTally tally(c);
  OwnerMap own(c, part);
  auto& seqs = part.blockless;
  bool changed = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t bi = 0; bi < part.blocks.size(); ++bi) {
      for (bool front : {true, false}) {
        Block& blk = part.blocks[bi];
        const Gate zz = c.gate(blk.zz);
        std::array<GateId, 2> cand{};
        std::array<int, 2> seq{};
        bool ok = true;
        for (int side = 0; side < 2; ++side) {
          Qubit q = zz.q[side];
          auto g = front ? c.prev_gate(first_on(blk, side), q) : c.next_gate(last_on(blk, side), q);
          if (!g || own.at(*g).seq == kNone || c.gate(*g).kind != K::R) {
            ok = false;
            break;
          }
          cand[side] = *g;
          seq[side] = own.at(*g).seq;
        }
        if (!ok) continue;
        const Gate ga = c.gate(cand[0]);
        const Gate gb = c.gate(cand[1]);
        if (same_action(ga, gb)) {
          // An earlier split can leave an exact match next to the block.
          for (int side = 0; side < 2; ++side) {
            auto& gates = seqs[seq[side]].gates;
            gates.erase(std::find(gates.begin(), gates.end(), cand[side]));
          }
          if (front) {
            blk.p.insert(blk.p.begin(), {cand[0], cand[1]});
          } else {
            blk.s.emplace_back(cand[0], cand[1]);
          }
          own.assign_block(blk, static_cast<int>(bi));
          changed = progress = true;
          continue;
        }
        if (!ga.p[1].near(gb.p[1])) continue;
        if (!ga.p[0].near(0.5) && !gb.p[0].near(0.5)) continue;
        const int small = ga.p[0].near(0.5) ? 0 : 1;
        const int big = 1 - small;
        if (!c.gate(cand[big]).p[0].near(1.0) || seqs[seq[small]].gates.size() != 1) continue;

        const GateId donor = cand[big];
        const Gate split(K::R, {zz.q[big]}, {0.5, c.gate(donor).p[1].half_turns()});
        c.set_param(donor, 0, Angle(0.5));
        GateId rest = front ? c.insert_before(donor, split) : c.insert_after(donor, split);
        auto& big_gates = seqs[seq[big]].gates;
        auto pos = std::find(big_gates.begin(), big_gates.end(), donor);
        *pos = rest;
        own.at(rest) = {kNone, seq[big]};
        auto pr = oriented(cand[small], donor, small);
        if (front) {
          blk.p.insert(blk.p.begin(), pr);
        } else {
          blk.s.push_back(pr);
        }
        own.assign_block(blk, static_cast<int>(bi));
        seqs[seq[small]].gates.clear();
        const Qubit qb = zz.q[big];
        auto neighbor = front ? c.prev_gate(rest, qb) : c.next_gate(rest, qb);
        if (neighbor && own.at(*neighbor).seq == seq[big] && merge_halves(c, rest, neighbor)) {
          big_gates.erase(std::find(big_gates.begin(), big_gates.end(), rest));
        }
        changed = progress = true;
      }
    }
  }
  compact(part);
  return tally.finish(changed);
}

namespace {

class Scheduler {
 public:
  Scheduler(const CircuitDag& c, const BlockPartition& part) : c_(c), part_(part) {
    nb_ = part.blocks.size();
    const std::size_t units = nb_ + part.blockless.size();
    unit_.assign(c.next_id(), kNone);
    rank_.assign(units, 0);
    emitted_.assign(units, 0);
    for (std::size_t b = 0; b < nb_; ++b) {
      const Block& blk = part.blocks[b];
      unit_[blk.zz] = static_cast<int>(b);
      for (const auto* list : {&blk.p, &blk.s}) {
        for (auto [x, y] : *list) unit_[x] = unit_[y] = static_cast<int>(b);
      }
    }
    for (std::size_t s = 0; s < part.blockless.size(); ++s) {
      for (GateId g : part.blockless[s].gates) unit_[g] = static_cast<int>(nb_ + s);
    }
    std::vector<std::size_t> pos(c.next_id(), 0);
    std::vector<GateId> order = c.execution_order();
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
    for (std::size_t u = 0; u < units; ++u) {
      std::size_t r = order.size();
      for (GateId g : gates_of(u)) r = std::min(r, pos[g]);
      rank_[u] = r;
    }
    for (std::size_t b = 0; b < nb_; ++b) refresh(static_cast<int>(b));
    for (std::size_t s = 0; s < part.blockless.size(); ++s) {
      if (pred_emitted(static_cast<int>(nb_ + s))) ready_seqs_.insert({rank_[nb_ + s], nb_ + s});
    }
  }

  Schedule run() {
    Schedule out;
    int last = kNone;
    while (out.size() < rank_.size()) {
      int next = pick_block(last);
      std::vector<int> before;
      if (next != kNone) {
        for (int u : external_preds(next)) {
          if (!emitted_[u]) before.push_back(u);
        }
      }
      if (last != kNone) {
        for (int u : external_succs(last)) {
          if (is_seq(u) && !emitted_[u] && pred_emitted(u) &&
              std::find(before.begin(), before.end(), u) == before.end()) {
            before.push_back(u);
          }
        }
      }
      if (next == kNone && before.empty()) {
        if (ready_seqs_.empty()) throw Error(ErrorCode::InvalidArgument, "block schedule has a cycle");
        before.push_back(static_cast<int>(ready_seqs_.begin()->second));
      }
      auto touches_next = [&](int u) {
        return next != kNone && c_.gate(part_.blocks[next].zz).acts_on(qubit_of_seq(u)) ? 1 : 0;
      };
      std::sort(before.begin(), before.end(), [&](int a, int b) {
        return std::pair(touches_next(a), rank_[a]) < std::pair(touches_next(b), rank_[b]);
      });
      for (int u : before) emit(u, out);
      if (next != kNone) {
        emit(next, out);
        last = next;
      }
    }
    return out;
  }

 private:
  bool is_seq(int u) const { return static_cast<std::size_t>(u) >= nb_; }

  Qubit qubit_of_seq(int u) const { return part_.blockless[u - nb_].qubit; }

  std::vector<GateId> gates_of(std::size_t u) const {
    if (u >= nb_) return part_.blockless[u - nb_].gates;
    const Block& b = part_.blocks[u];
    std::vector<GateId> g;
    for (auto [x, y] : b.p) {
      g.push_back(x);
      g.push_back(y);
    }
    g.push_back(b.zz);
    for (auto [x, y] : b.s) {
      g.push_back(x);
      g.push_back(y);
    }
    return g;
  }

  std::vector<int> external_preds(int u) const {
    std::vector<int> r;
    if (is_seq(u)) {
      const auto& s = part_.blockless[u - nb_];
      if (auto p = c_.prev_gate(s.gates.front(), s.qubit)) r.push_back(unit_[*p]);
      return r;
    }
    const Block& b = part_.blocks[u];
    for (int side = 0; side < 2; ++side) {
      if (auto p = c_.prev_gate(first_on(b, side), c_.gate(b.zz).q[side])) r.push_back(unit_[*p]);
    }
    return r;
  }

  std::vector<int> external_succs(int u) const {
    std::vector<int> r;
    if (is_seq(u)) {
      const auto& s = part_.blockless[u - nb_];
      if (auto n = c_.next_gate(s.gates.back(), s.qubit)) r.push_back(unit_[*n]);
      return r;
    }
    const Block& b = part_.blocks[u];
    for (int side = 0; side < 2; ++side) {
      if (auto n = c_.next_gate(last_on(b, side), c_.gate(b.zz).q[side])) r.push_back(unit_[*n]);
    }
    return r;
  }

  bool pred_emitted(int u) const {
    for (int p : external_preds(u)) {
      if (!emitted_[p]) return false;
    }
    return true;
  }

  // A block is available once every predecessor is emitted or is a sequence
  // that could be emitted right now.
  bool available(int b) const {
    if (emitted_[b]) return false;
    for (int p : external_preds(b)) {
      if (emitted_[p]) continue;
      if (!is_seq(p) || !pred_emitted(p)) return false;
    }
    return true;
  }

  void refresh(int b) {
    if (available(b)) ready_blocks_.insert({rank_[b], b});
  }

  int pick_block(int last) const {
    if (last != kNone) {
      const Gate& lz = c_.gate(part_.blocks[last].zz);
      int shared = kNone;
      for (int u : external_succs(last)) {
        int b = u;
        if (is_seq(b)) {
          auto s = external_succs(b);
          if (s.empty()) continue;
          b = s.front();
        }
        if (is_seq(b) || !available(b)) continue;
        const Gate& z = c_.gate(part_.blocks[b].zz);
        if (lz.acts_on(z.q[0]) && lz.acts_on(z.q[1])) return b;
        if (shared == kNone || rank_[b] < rank_[shared]) shared = b;
      }
      if (shared != kNone) return shared;
    }
    return ready_blocks_.empty() ? kNone : static_cast<int>(ready_blocks_.begin()->second);
  }

  void emit(int u, Schedule& out) {
    emitted_[u] = 1;
    ScheduleEntry e;
    e.gates = gates_of(u);
    if (is_seq(u)) {
      e.type = ScheduleEntry::Type::Sequence;
      e.qubits = {qubit_of_seq(u)};
      ready_seqs_.erase({rank_[u], u});
    } else {
      const Gate& z = c_.gate(part_.blocks[u].zz);
      e.type = ScheduleEntry::Type::Block;
      e.qubits = {z.q[0], z.q[1]};
      ready_blocks_.erase({rank_[u], u});
    }
    out.push_back(std::move(e));
    for (int s : external_succs(u)) {
      if (is_seq(s)) {
        if (pred_emitted(s)) ready_seqs_.insert({rank_[s], s});
        for (int b : external_succs(s)) {
          if (!is_seq(b)) refresh(b);
        }
      } else {
        refresh(s);
      }
    }
  }

  const CircuitDag& c_;
  const BlockPartition& part_;
  std::size_t nb_ = 0;
  std::vector<int> unit_;
  std::vector<std::size_t> rank_;
  std::vector<char> emitted_;
  std::set<std::pair<std::size_t, std::size_t>> ready_blocks_;
  std::set<std::pair<std::size_t, std::size_t>> ready_seqs_;
};

}  // namespace

Schedule order_blocks(CircuitDag& c, BlockPartition& part) {
  Schedule sched = Scheduler(c, part).run();
  CircuitDag rebuilt(c.n());
  std::unordered_map<GateId, GateId> remap;
  for (ScheduleEntry& e : sched) {
    for (GateId& g : e.gates) {
      GateId fresh = rebuilt.append(c.gate(g));
      remap[g] = fresh;
      g = fresh;
    }
  }
  rebuilt.set_output_permutation(c.output_permutation());
  for (Block& b : part.blocks) {
    b.zz = remap.at(b.zz);
    for (auto* list : {&b.p, &b.s}) {
      for (auto& [x, y] : *list) {
        x = remap.at(x);
        y = remap.at(y);
      }
    }
  }
  for (BlocklessSequence& s : part.blockless) {
    for (GateId& g : s.gates) g = remap.at(g);
  }
  c = std::move(rebuilt);
  return sched;
}

PassResult restrict_zz_angles(CircuitDag& c, Schedule* schedule) {
  PassTally tally(c);
  bool changed = false;
  std::unordered_map<GateId, std::vector<GateId>> remap;
  for (GateId id : c.execution_order()) {
    const Gate g = c.gate(id);
    if (g.kind != K::ZZ || g.p[0].near(0.5)) continue;
    auto rhs = rules::zz_restriction(g.q[0], g.q[1], g.p[0]);
    if (!rhs) throw Error(ErrorCode::PassOrder, "ZZ angle outside {pi/2, pi, 3pi/2}: " + g.to_string());
    remap[id] = c.splice(id, *rhs);
    changed = true;
  }
  if (schedule && !remap.empty()) {
    for (ScheduleEntry& e : *schedule) {
      std::vector<GateId> ids;
      for (GateId g : e.gates) {
        auto it = remap.find(g);
        if (it == remap.end()) {
          ids.push_back(g);
        } else {
          ids.insert(ids.end(), it->second.begin(), it->second.end());
        }
      }
      e.gates = std::move(ids);
    }
  }
  return tally.finish(changed);
}

std::string to_string(ScheduleEntry::Type t) { return t == ScheduleEntry::Type::Block ? "block" : "sequence"; }

}  // namespace ionc
