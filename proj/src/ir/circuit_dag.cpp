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

#include "ionc/circuit_dag.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "ionc/error.hpp"
#include "json.hpp"

namespace ionc {

using nlohmann::json;

CircuitDag::CircuitDag(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidRegister, "circuit needs at least one qubit");
  input_next_.resize(n);
  output_prev_.resize(n);
  perm_.resize(n);
  for (Qubit q = 0; q < n; ++q) {
    input_next_[q] = {Vertex::output(q), 0};
    output_prev_[q] = {Vertex::input(q), 0};
    perm_[q] = q;
  }
}

bool CircuitDag::contains(GateId id) const { return id < nodes_.size() && nodes_[id].has_value(); }

CircuitDag::Node& CircuitDag::node(GateId id) {
  if (!contains(id)) throw Error(ErrorCode::Wire, "no gate with id " + std::to_string(id));
  return *nodes_[id];
}

const CircuitDag::Node& CircuitDag::node(GateId id) const {
  if (!contains(id)) throw Error(ErrorCode::Wire, "no gate with id " + std::to_string(id));
  return *nodes_[id];
}

const Gate& CircuitDag::gate(GateId id) const { return node(id).gate; }

Endpoint& CircuitDag::out_of(const Endpoint& e) {
  switch (e.vertex.kind) {
    case Vertex::Kind::Input: return input_next_[e.vertex.index];
    case Vertex::Kind::Gate: return node(e.vertex.index).next[e.port];
    case Vertex::Kind::Output: break;
  }
  throw Error(ErrorCode::Wire, "output vertex has no outgoing edge");
}

Endpoint& CircuitDag::in_of(const Endpoint& e) {
  switch (e.vertex.kind) {
    case Vertex::Kind::Output: return output_prev_[e.vertex.index];
    case Vertex::Kind::Gate: return node(e.vertex.index).prev[e.port];
    case Vertex::Kind::Input: break;
  }
  throw Error(ErrorCode::Wire, "input vertex has no incoming edge");
}

const Endpoint& CircuitDag::out_of(const Endpoint& e) const {
  return const_cast<CircuitDag*>(this)->out_of(e);
}

const Endpoint& CircuitDag::in_of(const Endpoint& e) const {
  return const_cast<CircuitDag*>(this)->in_of(e);
}

Endpoint CircuitDag::endpoint_on(GateId id, Qubit q) const {
  int port = node(id).gate.port_of(q);
  if (port < 0) {
    throw Error(ErrorCode::Wire,
                "gate " + std::to_string(id) + " does not act on qubit " + std::to_string(q));
  }
  return {Vertex::gate(id), static_cast<std::size_t>(port)};
}

void CircuitDag::check_qubits(const Gate& g) const {
  for (Qubit q : g.qubits()) {
    if (q < 0 || q >= n_) {
      throw Error(ErrorCode::MalformedGate, "qubit " + std::to_string(q) + " outside register of " +
                                                std::to_string(n_));
    }
  }
  for (std::size_t i = 0; i < g.arity(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (g.q[i] == g.q[j]) throw Error(ErrorCode::MalformedGate, "repeated qubit in " + g.to_string());
    }
  }
}

GateId CircuitDag::add_node(Gate g) {
  g.id = nodes_.size();
  nodes_.emplace_back(Node{g, {}, {}});
  ++live_;
  return g.id;
}

GateId CircuitDag::append(Gate g) {
  check_qubits(g);
  GateId id = add_node(g);
  for (std::size_t k = 0; k < g.arity(); ++k) {
    Qubit q = g.q[k];
    Endpoint here{Vertex::gate(id), k};
    Endpoint last = output_prev_[q];
    nodes_[id]->prev[k] = last;
    out_of(last) = here;
    nodes_[id]->next[k] = {Vertex::output(q), 0};
    output_prev_[q] = here;
  }
  return id;
}

std::vector<GateId> CircuitDag::splice(GateId target, const std::vector<Gate>& replacement) {
  const Gate old = node(target).gate;
  for (const Gate& g : replacement) {
    check_qubits(g);
    for (Qubit q : g.qubits()) {
      if (!old.acts_on(q)) {
        throw Error(ErrorCode::Splice, "replacement " + g.to_string() + " leaves the qubits of " +
                                           old.to_string());
      }
    }
  }
  std::array<Endpoint, kMaxArity> cur{};
  std::array<Endpoint, kMaxArity> after{};
  for (std::size_t k = 0; k < old.arity(); ++k) {
    cur[k] = nodes_[target]->prev[k];
    after[k] = nodes_[target]->next[k];
  }
  nodes_[target].reset();
  --live_;

  std::vector<GateId> ids;
  ids.reserve(replacement.size());
  for (const Gate& g : replacement) {
    GateId id = add_node(g);
    ids.push_back(id);
    for (std::size_t k = 0; k < g.arity(); ++k) {
      auto slot = static_cast<std::size_t>(old.port_of(g.q[k]));
      Endpoint here{Vertex::gate(id), k};
      nodes_[id]->prev[k] = cur[slot];
      out_of(cur[slot]) = here;
      cur[slot] = here;
    }
  }
  for (std::size_t k = 0; k < old.arity(); ++k) {
    out_of(cur[k]) = after[k];
    in_of(after[k]) = cur[k];
  }
  return ids;
}

void CircuitDag::detach_single(GateId id) {
  Node& nd = node(id);
  if (!nd.gate.single_qubit()) throw Error(ErrorCode::Wire, "only single-qubit gates can move");
  Endpoint p = nd.prev[0];
  Endpoint x = nd.next[0];
  out_of(p) = x;
  in_of(x) = p;
}

void CircuitDag::attach_between(GateId id, Endpoint before, Endpoint after) {
  Endpoint here{Vertex::gate(id), 0};
  nodes_[id]->prev[0] = before;
  nodes_[id]->next[0] = after;
  out_of(before) = here;
  in_of(after) = here;
}

GateId CircuitDag::insert_before(GateId anchor, Gate g) {
  if (!g.single_qubit()) throw Error(ErrorCode::Wire, "insert_before takes a single-qubit gate");
  check_qubits(g);
  Endpoint at = endpoint_on(anchor, g.q[0]);
  Endpoint before = in_of(at);
  GateId id = add_node(g);
  attach_between(id, before, at);
  return id;
}

GateId CircuitDag::insert_after(GateId anchor, Gate g) {
  if (!g.single_qubit()) throw Error(ErrorCode::Wire, "insert_after takes a single-qubit gate");
  check_qubits(g);
  Endpoint at = endpoint_on(anchor, g.q[0]);
  Endpoint after = out_of(at);
  GateId id = add_node(g);
  attach_between(id, at, after);
  return id;
}

GateId CircuitDag::prepend(Gate g) {
  if (!g.single_qubit()) throw Error(ErrorCode::Wire, "prepend takes a single-qubit gate");
  check_qubits(g);
  Endpoint in{Vertex::input(g.q[0]), 0};
  Endpoint after = input_next_[g.q[0]];
  GateId id = add_node(g);
  attach_between(id, in, after);
  return id;
}

void CircuitDag::move_before(GateId g, GateId anchor) {
  if (g == anchor) throw Error(ErrorCode::Wire, "cannot move a gate relative to itself");
  Endpoint at = endpoint_on(anchor, node(g).gate.q[0]);
  detach_single(g);
  attach_between(g, in_of(at), at);
}

void CircuitDag::move_after(GateId g, GateId anchor) {
  if (g == anchor) throw Error(ErrorCode::Wire, "cannot move a gate relative to itself");
  Endpoint at = endpoint_on(anchor, node(g).gate.q[0]);
  detach_single(g);
  attach_between(g, at, out_of(at));
}

void CircuitDag::update(GateId id, GateKind kind, std::span<const Angle> params) {
  Gate& g = node(id).gate;
  if (arity(kind) != g.arity()) {
    throw Error(ErrorCode::MalformedGate, "update cannot change gate arity");
  }
  Gate fresh(kind, g.qubits(), params);
  fresh.id = id;
  g = fresh;
}

void CircuitDag::set_param(GateId id, std::size_t index, Angle value) {
  Gate& g = node(id).gate;
  if (index >= param_count(g.kind)) throw Error(ErrorCode::MalformedGate, "parameter index out of range");
  g.p[index] = Angle(value.half_turns(), param_period(g.kind));
}

std::pair<Vertex, Vertex> CircuitDag::wire_neighbors(GateId id, Qubit q) const {
  Endpoint at = endpoint_on(id, q);
  return {in_of(at).vertex, out_of(at).vertex};
}

std::optional<GateId> CircuitDag::prev_gate(GateId id, Qubit q) const {
  Vertex v = wire_neighbors(id, q).first;
  if (!v.is_gate()) return std::nullopt;
  return v.index;
}

std::optional<GateId> CircuitDag::next_gate(GateId id, Qubit q) const {
  Vertex v = wire_neighbors(id, q).second;
  if (!v.is_gate()) return std::nullopt;
  return v.index;
}

std::optional<GateId> CircuitDag::first_gate(Qubit q) const {
  if (q < 0 || q >= n_) throw Error(ErrorCode::Wire, "qubit out of range");
  const Endpoint& e = input_next_[q];
  if (!e.vertex.is_gate()) return std::nullopt;
  return e.vertex.index;
}

std::optional<GateId> CircuitDag::last_gate(Qubit q) const {
  if (q < 0 || q >= n_) throw Error(ErrorCode::Wire, "qubit out of range");
  const Endpoint& e = output_prev_[q];
  if (!e.vertex.is_gate()) return std::nullopt;
  return e.vertex.index;
}

std::vector<GateId> CircuitDag::wire_gates(Qubit q) const {
  if (q < 0 || q >= n_) throw Error(ErrorCode::Wire, "qubit out of range");
  std::vector<GateId> out;
  Endpoint e = input_next_[q];
  while (e.vertex.is_gate()) {
    out.push_back(e.vertex.index);
    e = nodes_[e.vertex.index]->next[e.port];
  }
  return out;
}

std::vector<GateId> CircuitDag::execution_order() const {
  std::vector<std::uint8_t> indeg(nodes_.size(), 0);
  std::priority_queue<GateId, std::vector<GateId>, std::greater<>> ready;
  for (GateId id = 0; id < nodes_.size(); ++id) {
    if (!nodes_[id]) continue;
    const Node& nd = *nodes_[id];
    for (std::size_t k = 0; k < nd.gate.arity(); ++k) {
      if (nd.prev[k].vertex.is_gate()) ++indeg[id];
    }
    if (indeg[id] == 0) ready.push(id);
  }
  std::vector<GateId> order;
  order.reserve(live_);
  while (!ready.empty()) {
    GateId id = ready.top();
    ready.pop();
    order.push_back(id);
    const Node& nd = *nodes_[id];
    for (std::size_t k = 0; k < nd.gate.arity(); ++k) {
      const Vertex& v = nd.next[k].vertex;
      if (v.is_gate() && --indeg[v.index] == 0) ready.push(v.index);
    }
  }
  return order;
}

std::vector<Gate> CircuitDag::gates() const {
  std::vector<Gate> out;
  out.reserve(live_);
  for (GateId id : execution_order()) out.push_back(nodes_[id]->gate);
  return out;
}

void CircuitDag::eliminate_swap(GateId id) {
  const Gate sw = node(id).gate;
  if (sw.kind != GateKind::SWAP) throw Error(ErrorCode::Wire, "eliminate_swap needs a SWAP gate");
  const Qubit i = sw.q[0];
  const Qubit j = sw.q[1];
  Endpoint a = nodes_[id]->prev[0];
  Endpoint b = nodes_[id]->prev[1];
  Endpoint c = nodes_[id]->next[0];
  Endpoint d = nodes_[id]->next[1];
  nodes_[id].reset();
  --live_;

  // Walk both tails before relabeling so a gate on both paths is seen once per port.
  auto tail = [&](Endpoint e) {
    std::vector<Endpoint> out;
    while (e.vertex.is_gate()) {
      out.push_back(e);
      e = nodes_[e.vertex.index]->next[e.port];
    }
    return out;
  };
  std::vector<Endpoint> from_c = tail(c);
  std::vector<Endpoint> from_d = tail(d);
  for (const Endpoint& e : from_d) nodes_[e.vertex.index]->gate.q[e.port] = i;
  for (const Endpoint& e : from_c) nodes_[e.vertex.index]->gate.q[e.port] = j;

  Endpoint end_i = from_d.empty() ? a : from_d.back();
  Endpoint end_j = from_c.empty() ? b : from_c.back();
  Endpoint head_d = from_d.empty() ? Endpoint{Vertex::output(i), 0} : d;
  Endpoint head_c = from_c.empty() ? Endpoint{Vertex::output(j), 0} : c;

  out_of(a) = head_d;
  if (!from_d.empty()) in_of(head_d) = a;
  out_of(b) = head_c;
  if (!from_c.empty()) in_of(head_c) = b;
  out_of(end_i) = {Vertex::output(i), 0};
  output_prev_[i] = end_i;
  out_of(end_j) = {Vertex::output(j), 0};
  output_prev_[j] = end_j;

  std::swap(perm_[i], perm_[j]);
}

void CircuitDag::set_output_permutation(std::vector<Qubit> perm) {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw Error(ErrorCode::InvalidPermutation, "permutation size differs from qubit count");
  }
  std::vector<bool> seen(n_, false);
  for (Qubit q : perm) {
    if (q < 0 || q >= n_ || seen[q]) throw Error(ErrorCode::InvalidPermutation, "not a bijection");
    seen[q] = true;
  }
  perm_ = std::move(perm);
}

void CircuitDag::validate() const {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::Wire, "invalid circuit: " + m); };
  std::size_t subnodes = 0;
  for (const auto& nd : nodes_) {
    if (nd) subnodes += nd->gate.arity();
  }
  std::size_t visited = 0;
  for (Qubit q = 0; q < n_; ++q) {
    Endpoint prev{Vertex::input(q), 0};
    Endpoint e = input_next_[q];
    while (e.vertex.is_gate()) {
      if (!contains(e.vertex.index)) fail("edge into a deleted gate");
      const Node& nd = *nodes_[e.vertex.index];
      if (e.port >= nd.gate.arity()) fail("port out of range");
      if (nd.gate.q[e.port] != q) fail("subnode label differs from its path on qubit " + std::to_string(q));
      if (!(nd.prev[e.port] == prev)) fail("back edge mismatch on qubit " + std::to_string(q));
      if (++visited > subnodes) fail("path revisits subnodes");
      prev = e;
      e = nd.next[e.port];
    }
    if (!(e.vertex == Vertex::output(q))) fail("path of qubit " + std::to_string(q) + " ends elsewhere");
    if (!(output_prev_[q] == prev)) fail("output back edge mismatch");
  }
  if (visited != subnodes) fail("some subnodes are not on any path");
  if (execution_order().size() != live_) fail("cycle detected");
  std::vector<bool> seen(n_, false);
  for (Qubit q : perm_) {
    if (q < 0 || q >= n_ || seen[q]) fail("output permutation is not a bijection");
    seen[q] = true;
  }
}

std::string CircuitDag::to_json(int indent) const {
  json j;
  j["n"] = n_;
  json arr = json::array();
  for (GateId id : execution_order()) {
    const Gate& g = nodes_[id]->gate;
    json params = json::array();
    for (const Angle& a : g.params()) params.push_back(a.half_turns());
    arr.push_back({{"id", id},
                   {"kind", std::string(kind_name(g.kind))},
                   {"qubits", std::vector<Qubit>(g.qubits().begin(), g.qubits().end())},
                   {"params_pi", params}});
  }
  j["gates"] = std::move(arr);
  j["output_permutation"] = perm_;
  return j.dump(indent);
}

CircuitDag CircuitDag::from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    CircuitDag dag(j.at("n").get<int>());
    for (const json& g : j.at("gates")) {
      auto name = g.at("kind").get<std::string>();
      auto kind = kind_from_name(name);
      if (!kind) throw Error(ErrorCode::UnsupportedGate, "unknown gate kind " + name);
      auto qubits = g.at("qubits").get<std::vector<Qubit>>();
      std::vector<Angle> params;
      for (double v : g.value("params_pi", std::vector<double>{})) params.emplace_back(v);
      dag.append(Gate(*kind, qubits, params));
    }
    if (j.contains("output_permutation")) {
      dag.set_output_permutation(j.at("output_permutation").get<std::vector<Qubit>>());
    }
    return dag;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("circuit json: ") + e.what());
  }
}

}  // namespace ionc
