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
#include <string>
#include <utility>
#include <vector>

#include "ionc/circuit_dag.hpp"
#include "ionc/passes.hpp"

namespace ionc {

/// Converts Rx/Ry to R form, then folds every Rz into the phases of later R
/// gates on its wire. A terminal Rz carries the residual phase unless it is
/// zero or `drop_terminal_rz` is set. Throws `ErrorCode::PassOrder` on any
/// other single-qubit kind.
PassResult phase_tracking(CircuitDag& c, bool drop_terminal_rz = false);

/// A ZZ gate with the matching single-qubit gates around it. Each pair holds
/// the gate on the anchor's first qubit and the gate on its second qubit;
/// `p` and `s` are in execution order.
struct Block {
  GateId zz = kNoGate;
  std::vector<std::pair<GateId, GateId>> p;
  std::vector<std::pair<GateId, GateId>> s;
};

/// A maximal run of single-qubit gates on one wire outside every block.
struct BlocklessSequence {
  Qubit qubit = 0;
  std::vector<GateId> gates;
};

struct BlockPartition {
  std::vector<Block> blocks;
  std::vector<BlocklessSequence> blockless;
};

/// Blocks around each ZZ in execution order, then the leftover sequences.
/// Requires gates in {R, Rz, ZZ}.
BlockPartition build_blocks(const CircuitDag& c);

/// Throws `ErrorCode::InvalidArgument` unless `part` covers every gate of `c`
/// once, pairs match exactly, block chains are contiguous around their anchor
/// and every blockless sequence is a maximal wire run.
void check_partition(const CircuitDag& c, const BlockPartition& part);

/// Moves matching blockless sequences and successor tails into predecessor
/// sequences of later blocks; a chain that cannot complete is rolled back.
/// The circuit is not modified, only the partition.
PassResult rearrange_blocks(const CircuitDag& c, BlockPartition& part);

/// Splits R(pi) next to a block into two R(pi/2) so that the half next to the
/// block pairs with an R(pi/2) of equal phase on the other wire. Committed
/// only when the number of blockless sequences drops. Identical blockless
/// gates on both wires next to a block are absorbed without a split.
PassResult split_angles(CircuitDag& c, BlockPartition& part);

struct ScheduleEntry {
  enum class Type { Block, Sequence };
  Type type = Type::Sequence;
  std::vector<Qubit> qubits;
  std::vector<GateId> gates;
};

using Schedule = std::vector<ScheduleEntry>;

/// Orders blocks and blockless sequences: blocks on the same pair are kept
/// adjacent, and the sequence on the qubit shared with the next block runs
/// last. Rebuilds `c` in schedule order, so gate ids in the returned schedule
/// and `part` refer to the rebuilt circuit.
Schedule order_blocks(CircuitDag& c, BlockPartition& part);

/// ZZ(pi) becomes two ZZ(pi/2), ZZ(3pi/2) three. Other angles throw
/// `ErrorCode::PassOrder`. Gate ids in `schedule`, if given, are updated.
PassResult restrict_zz_angles(CircuitDag& c, Schedule* schedule = nullptr);

std::string to_string(ScheduleEntry::Type t);

}  // namespace ionc
