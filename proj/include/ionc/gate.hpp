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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ionc/angle.hpp"

namespace ionc {

using Qubit = int;
using GateId = std::size_t;

inline constexpr GateId kNoGate = std::numeric_limits<GateId>::max();

enum class GateKind : std::uint8_t {
  R,
  Rz,
  ZZ,
  Rx,
  Ry,
  X,
  Y,
  Z,
  H,
  S,
  Sdg,
  T,
  Tdg,
  TK1,
  CNOT,
  CZ,
  CU1,
  SWAP,
  CRy,
  CCX,
};

inline constexpr std::size_t kGateKindCount = 20;
inline constexpr std::size_t kMaxArity = 3;
inline constexpr std::size_t kMaxParams = 3;

std::size_t arity(GateKind kind) noexcept;
std::size_t param_count(GateKind kind) noexcept;
std::string_view kind_name(GateKind kind) noexcept;
std::optional<GateKind> kind_from_name(std::string_view name) noexcept;

/// Period of the given parameter, in units of pi.
double param_period(GateKind kind) noexcept;

/// Rz, Z, S, Sdg, T, Tdg: diagonal single-qubit gates.
bool is_z_diagonal(GateKind kind) noexcept;

/**
 * One quantum operation.
 *
 * Qubits and parameters live in fixed inline arrays; the spans returned by
 * `qubits()` and `params()` have exactly `arity(kind)` and
 * `param_count(kind)` elements. For controlled gates the controls come first.
 */
struct Gate {
  GateId id = kNoGate;
  GateKind kind = GateKind::Rz;
  std::array<Qubit, kMaxArity> q{};
  std::array<Angle, kMaxParams> p{};

  Gate() = default;

  /// Throws `ErrorCode::MalformedGate` on wrong arity, parameter count or
  /// repeated qubits. Parameters are given in units of pi.
  Gate(GateKind kind, std::initializer_list<Qubit> qubits,
       std::initializer_list<double> params_pi = {});
  Gate(GateKind kind, std::span<const Qubit> qubits, std::span<const Angle> params);

  std::span<const Qubit> qubits() const { return {q.data(), ionc::arity(kind)}; }
  std::span<const Angle> params() const { return {p.data(), ionc::param_count(kind)}; }

  std::size_t arity() const { return ionc::arity(kind); }
  bool single_qubit() const { return arity() == 1; }
  bool acts_on(Qubit qubit) const;

  /// Subnode index of `qubit`, or -1.
  int port_of(Qubit qubit) const;

  /// Renders e.g. `CNOT q0,q1` or `Rz(0.25) q3`.
  std::string to_string() const;
};

/// Same kind, qubits and parameters (within `eps`), ignoring ids.
bool same_operation(const Gate& a, const Gate& b, double eps = kAngleEps);

/// Same kind and parameters, ignoring qubits and ids.
bool same_action(const Gate& a, const Gate& b, double eps = kAngleEps);

}  // namespace ionc
