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

#include <cstddef>
#include <span>
#include <vector>

#include "ionc/circuit_dag.hpp"

namespace ionc {

struct PassResult {
  bool changed = false;
  std::size_t gates_removed = 0;
  std::size_t gates_added = 0;

  PassResult& operator+=(const PassResult& o) {
    changed = changed || o.changed;
    gates_removed += o.gates_removed;
    gates_added += o.gates_added;
    return *this;
  }
};

/// Records gate-count deltas for a pass: construct before, call `finish` after.
class PassTally {
 public:
  explicit PassTally(const CircuitDag& c) : c_(c), before_(c.gate_count()) {}
  PassResult finish(bool changed) const;

 private:
  const CircuitDag& c_;
  std::size_t before_;
};

/// Removes every SWAP by exchanging the outgoing edges of its subnodes and
/// relabeling later gates; the output permutation records the relabeling.
PassResult eliminate_swaps(CircuitDag& c);

struct RedundancyOptions {
  /// Only merge Rx, Ry and R rotations whose summed pulse area lands in
  /// {0, pi/2, pi}, so restricted angles stay restricted.
  bool restricted = false;
};

/// Local fixpoint of: zero-angle deletion, merging of adjacent rotations of
/// the same kind (equal phase for R, same pair for ZZ/CU1/CRy) and
/// cancellation of adjacent self-inverse pairs.
PassResult remove_redundancies(CircuitDag& c, const RedundancyOptions& opts = {});

/// One sweep in execution order moving single-qubit gates backward
/// through two-qubit gates they commute with: diagonal gates through ZZ, CZ,
/// CU1 and through controls; X-axis rotations through CNOT/CCX targets;
/// Y-axis rotations through CRy targets.
PassResult commute_through_multis(CircuitDag& c);

/// remove_redundancies, then alternate commute and remove until a round
/// removes nothing.
PassResult reduce_fixpoint(CircuitDag& c, const RedundancyOptions& opts = {});

enum class Macro { CRy };

inline constexpr Macro kDefaultMacros[] = {Macro::CRy};

/// Replaces every CRy(l*pi) by the four-gate ZZ macro, then reduce_fixpoint.
PassResult match_macros(CircuitDag& c, std::span<const Macro> macros = kDefaultMacros);

/// Maximal single-qubit runs become one TK1 each; identity runs vanish.
PassResult squash_single_qubit_runs(CircuitDag& c);

/// Rewrites every TK1 as Rz, Rx, Rz (zero angles dropped).
PassResult expand_tk1(CircuitDag& c);

/// Rebases to {Rx, Rz, ZZ}: generic ZZ angles via two ZZ(pi/2),
/// reduce_fixpoint, squash, then CNOT networks, CNOT -> ZZ(pi/2) and TK1
/// expansion. Throws `ErrorCode::UnsupportedGate` when no template applies.
PassResult rebase_to_M(CircuitDag& c);

/// Moves each Rz that follows a diagonal two-qubit gate back through the run
/// of diagonal gates and merges it with an Rz found there.
PassResult merge_rz_through_zz(CircuitDag& c, const RedundancyOptions& opts = {});

/// squash, TK1 expansion, Rz merging and reduce_fixpoint until stable.
PassResult build_rx_rz_sequences(CircuitDag& c);

/// Rewrites every Rx to pulse areas in {pi/2, pi}, then merges Rz gates
/// through ZZ and reduces in restricted mode.
PassResult restrict_single_qubit_angles(CircuitDag& c);

/// Per-gate rewrite of every Rx without any merging (naive flow).
PassResult restrict_rx_only(CircuitDag& c);

/// Per-gate rebase to {Rx, Rz, ZZ} without squashing or reduction (naive
/// flow): generic ZZ via two ZZ(pi/2), networks, CNOT -> ZZ(pi/2), each
/// single-qubit gate via its own TK1.
PassResult rebase_naive(CircuitDag& c);

/// Number of ZZ gates, counted before ZZ angle restriction.
std::size_t zz_count(const CircuitDag& c);

}  // namespace ionc
