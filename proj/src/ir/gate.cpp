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

#include "ionc/gate.hpp"

#include <algorithm>
#include <sstream>

#include "ionc/error.hpp"

namespace ionc {
namespace {

struct KindInfo {
  std::string_view name;
  std::size_t arity;
  std::size_t params;
};

constexpr std::array<KindInfo, kGateKindCount> kInfo{{
    {"R", 1, 2},
    {"Rz", 1, 1},
    {"ZZ", 2, 1},
    {"Rx", 1, 1},
    {"Ry", 1, 1},
    {"X", 1, 0},
    {"Y", 1, 0},
    {"Z", 1, 0},
    {"H", 1, 0},
    {"S", 1, 0},
    {"Sdg", 1, 0},
    {"T", 1, 0},
    {"Tdg", 1, 0},
    {"TK1", 1, 3},
    {"CNOT", 2, 0},
    {"CZ", 2, 0},
    {"CU1", 2, 1},
    {"SWAP", 2, 0},
    {"CRy", 2, 1},
    {"CCX", 3, 0},
}};

const KindInfo& info(GateKind k) { return kInfo[static_cast<std::size_t>(k)]; }

void check_qubits(GateKind kind, std::span<const Qubit> qs) {
  if (qs.size() != arity(kind)) {
    throw Error(ErrorCode::MalformedGate, std::string(kind_name(kind)) + " expects " +
                                              std::to_string(arity(kind)) + " qubits");
  }
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (qs[i] < 0) throw Error(ErrorCode::MalformedGate, "negative qubit index");
    for (std::size_t j = 0; j < i; ++j) {
      if (qs[i] == qs[j]) {
        throw Error(ErrorCode::MalformedGate,
                    std::string(kind_name(kind)) + " repeats qubit " + std::to_string(qs[i]));
      }
    }
  }
}

}  // namespace

std::size_t arity(GateKind kind) noexcept { return info(kind).arity; }
std::size_t param_count(GateKind kind) noexcept { return info(kind).params; }
std::string_view kind_name(GateKind kind) noexcept { return info(kind).name; }

std::optional<GateKind> kind_from_name(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kInfo.size(); ++i) {
    if (kInfo[i].name == name) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

double param_period(GateKind kind) noexcept { return kind == GateKind::CRy ? 4.0 : 2.0; }

bool is_z_diagonal(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Rz:
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
      return true;
    default:
      return false;
  }
}

Gate::Gate(GateKind k, std::initializer_list<Qubit> qubits, std::initializer_list<double> params_pi)
    : kind(k) {
  check_qubits(k, {qubits.begin(), qubits.size()});
  if (params_pi.size() != param_count(k)) {
    throw Error(ErrorCode::MalformedGate, std::string(kind_name(k)) + " expects " +
                                              std::to_string(param_count(k)) + " parameters");
  }
  std::copy(qubits.begin(), qubits.end(), q.begin());
  std::size_t i = 0;
  for (double v : params_pi) p[i++] = Angle(v, param_period(k));
}

Gate::Gate(GateKind k, std::span<const Qubit> qubits, std::span<const Angle> params) : kind(k) {
  check_qubits(k, qubits);
  if (params.size() != param_count(k)) {
    throw Error(ErrorCode::MalformedGate, std::string(kind_name(k)) + " expects " +
                                              std::to_string(param_count(k)) + " parameters");
  }
  std::copy(qubits.begin(), qubits.end(), q.begin());
  for (std::size_t i = 0; i < params.size(); ++i) {
    p[i] = Angle(params[i].half_turns(), param_period(k));
  }
}

bool Gate::acts_on(Qubit qubit) const { return port_of(qubit) >= 0; }

int Gate::port_of(Qubit qubit) const {
  for (std::size_t i = 0; i < arity(); ++i) {
    if (q[i] == qubit) return static_cast<int>(i);
  }
  return -1;
}

std::string Gate::to_string() const {
  std::ostringstream os;
  os << kind_name(kind);
  if (param_count(kind) > 0) {
    os << '(';
    for (std::size_t i = 0; i < param_count(kind); ++i) {
      if (i) os << ',';
      os << p[i].half_turns();
    }
    os << ')';
  }
  for (std::size_t i = 0; i < arity(); ++i) os << (i ? ",q" : " q") << q[i];
  return os.str();
}

bool same_action(const Gate& a, const Gate& b, double eps) {
  if (a.kind != b.kind) return false;
  for (std::size_t i = 0; i < param_count(a.kind); ++i) {
    if (!a.p[i].near(b.p[i], eps)) return false;
  }
  return true;
}

bool same_operation(const Gate& a, const Gate& b, double eps) {
  if (!same_action(a, b, eps)) return false;
  return std::equal(a.qubits().begin(), a.qubits().end(), b.qubits().begin());
}

}  // namespace ionc
