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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ionc/gate.hpp"

namespace ionc {

/// A vertex of the circuit graph: an input v_i, a gate, or an output w_i.
struct Vertex {
  enum class Kind : std::uint8_t { Input, Gate, Output };
  Kind kind = Kind::Input;
  std::size_t index = 0;  // qubit for Input/Output, gate id for Gate

  static Vertex input(Qubit q) { return {Kind::Input, static_cast<std::size_t>(q)}; }
  static Vertex output(Qubit q) { return {Kind::Output, static_cast<std::size_t>(q)}; }
  static Vertex gate(GateId id) { return {Kind::Gate, id}; }

  bool is_gate() const { return kind == Kind::Gate; }
  bool operator==(const Vertex&) const = default;
};

/// One end of a wire edge: a vertex plus the subnode (port) it attaches to.
/// Input and output vertices only have port 0.
struct Endpoint {
  Vertex vertex;
  std::size_t port = 0;
  bool operator==(const Endpoint&) const = default;
};

/**
 * Circuit as a directed acyclic graph with per-qubit subnodes.
 *
 * Every qubit q has an input vertex v_q and an output vertex w_q joined by a
 * single path; each gate of arity m contributes m subnodes, one on the path
 * of each of its qubits. Subnode k of a gate lies on qubit `gate.q[k]`, so
 * the paths never share an edge.
 *
 * Gate ids are assigned on insertion and never reused. The output
 * permutation `perm` records the relabeling introduced by SWAP elimination:
 * the original circuit equals P(perm) applied after this circuit, where P
 * moves the state of qubit k to qubit perm[k].
 */
class CircuitDag {
 public:
  /// Throws `ErrorCode::InvalidRegister` when n < 1.
  explicit CircuitDag(int n);

  int n() const { return n_; }
  std::size_t gate_count() const { return live_; }
  bool empty() const { return live_ == 0; }
  bool contains(GateId id) const;
  const Gate& gate(GateId id) const;
  GateId next_id() const { return nodes_.size(); }

  /// Adds `g` at the end of its wires and returns its fresh id. Any id already
  /// set on `g` is ignored.
  GateId append(Gate g);

  /// Replaces `target` by `replacement` at the same cut; an empty list deletes
  /// it. Replacement gates may only act on qubits of `target`. Returns the new
  /// ids in order.
  std::vector<GateId> splice(GateId target, const std::vector<Gate>& replacement);
  void remove(GateId id) { splice(id, {}); }

  /// Inserts a single-qubit gate directly before/after `anchor` on g's wire.
  GateId insert_before(GateId anchor, Gate g);
  GateId insert_after(GateId anchor, Gate g);

  /// Inserts a single-qubit gate as the first gate of its wire.
  GateId prepend(Gate g);

  /// Moves single-qubit gate `g` so it directly precedes `anchor` on its wire.
  void move_before(GateId g, GateId anchor);

  /// Moves single-qubit gate `g` so it directly follows `anchor` on its wire.
  void move_after(GateId g, GateId anchor);

  /// Changes kind and parameters in place; the new kind must have the same
  /// qubits (and therefore the same arity).
  void update(GateId id, GateKind kind, std::span<const Angle> params);
  void set_param(GateId id, std::size_t index, Angle value);

  /// Vertices directly before and after `id` on wire `q`. Throws
  /// `ErrorCode::Wire` when the gate does not act on `q`.
  std::pair<Vertex, Vertex> wire_neighbors(GateId id, Qubit q) const;

  std::optional<GateId> prev_gate(GateId id, Qubit q) const;
  std::optional<GateId> next_gate(GateId id, Qubit q) const;
  std::optional<GateId> first_gate(Qubit q) const;
  std::optional<GateId> last_gate(Qubit q) const;

  /// Gates on wire `q` from input to output.
  std::vector<GateId> wire_gates(Qubit q) const;

  /// Deterministic topological order; ready gates are taken by ascending id.
  std::vector<GateId> execution_order() const;

  /// Gates in execution order, copied.
  std::vector<Gate> gates() const;

  /**
   * Removes SWAP gate `id` by exchanging the outgoing edges of its two
   * subnodes. Every later gate on the two paths is relabeled and the output
   * permutation is composed with the transposition.
   */
  void eliminate_swap(GateId id);

  const std::vector<Qubit>& output_permutation() const { return perm_; }

  /// Throws `ErrorCode::InvalidPermutation` unless `perm` is a bijection on
  /// {0, ..., n-1}.
  void set_output_permutation(std::vector<Qubit> perm);

  /// Checks all structural invariants; throws `ErrorCode::Wire` on failure.
  void validate() const;

  /// `{"n", "gates": [{"id", "kind", "qubits", "params_pi"}], "output_permutation"}`
  /// with gates in execution order. `indent < 0` gives compact output.
  std::string to_json(int indent = -1) const;

  /// Rebuilds a circuit from its serialized form, appending gates in array
  /// order. Ids in the input are not preserved. Throws `ErrorCode::Parse`.
  static CircuitDag from_json(std::string_view text);

 private:
  struct Node {
    Gate gate;
    std::array<Endpoint, kMaxArity> prev{};
    std::array<Endpoint, kMaxArity> next{};
  };

  Node& node(GateId id);
  const Node& node(GateId id) const;
  Endpoint& out_of(const Endpoint& e);
  Endpoint& in_of(const Endpoint& e);
  const Endpoint& out_of(const Endpoint& e) const;
  const Endpoint& in_of(const Endpoint& e) const;
  Endpoint endpoint_on(GateId id, Qubit q) const;
  void check_qubits(const Gate& g) const;
  void detach_single(GateId id);
  void attach_between(GateId id, Endpoint before, Endpoint after);
  GateId add_node(Gate g);

  int n_;
  std::size_t live_ = 0;
  std::vector<std::optional<Node>> nodes_;
  std::vector<Endpoint> input_next_;
  std::vector<Endpoint> output_prev_;
  std::vector<Qubit> perm_;
};

}  // namespace ionc
