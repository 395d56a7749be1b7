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

#include "ionc/native.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "ionc/error.hpp"

namespace ionc {

using cd = std::complex<double>;
using std::numbers::pi;

namespace {

constexpr cd kI{0.0, 1.0};

Matrix2 r_matrix(double theta, double phi) {
  double c = std::cos(theta / 2);
  double s = std::sin(theta / 2);
  Matrix2 m;
  m << c, -kI * std::exp(-kI * phi) * s, -kI * std::exp(kI * phi) * s, c;
  return m;
}

Matrix2 rz_matrix(double phi) {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = std::exp(-kI * phi / 2.0);
  m(1, 1) = std::exp(kI * phi / 2.0);
  return m;
}

Matrix2 diag2(cd a, cd b) {
  Matrix2 m = Matrix2::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// Controlled-u with the control on bit 0 and the target on bit 1.
Matrix controlled(const Matrix2& u) {
  Matrix m = Matrix::Identity(4, 4);
  m(1, 1) = u(0, 0);
  m(1, 3) = u(0, 1);
  m(3, 1) = u(1, 0);
  m(3, 3) = u(1, 1);
  return m;
}

double rad(const Angle& a) { return a.radians(); }

}  // namespace

Matrix2 single_qubit_matrix(const Gate& g) {
  auto p = g.params();
  switch (g.kind) {
    case GateKind::R: return r_matrix(rad(p[0]), rad(p[1]));
    case GateKind::Rz: return rz_matrix(rad(p[0]));
    case GateKind::Rx: return r_matrix(rad(p[0]), 0.0);
    case GateKind::Ry: return r_matrix(rad(p[0]), pi / 2);
    case GateKind::X: {
      Matrix2 m;
      m << 0, 1, 1, 0;
      return m;
    }
    case GateKind::Y: {
      Matrix2 m;
      m << 0, -kI, kI, 0;
      return m;
    }
    case GateKind::Z: return diag2(1.0, -1.0);
    case GateKind::H: {
      Matrix2 m;
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    }
    case GateKind::S: return diag2(1.0, kI);
    case GateKind::Sdg: return diag2(1.0, -kI);
    case GateKind::T: return diag2(1.0, std::exp(kI * pi / 4.0));
    case GateKind::Tdg: return diag2(1.0, std::exp(-kI * pi / 4.0));
    case GateKind::TK1:
      return rz_matrix(rad(p[0])) * r_matrix(rad(p[1]), 0.0) * rz_matrix(rad(p[2]));
    default:
      throw Error(ErrorCode::InvalidArgument, "not a single-qubit gate: " + g.to_string());
  }
}

Matrix gate_matrix(const Gate& g) {
  if (g.single_qubit()) return single_qubit_matrix(g);
  auto p = g.params();
  switch (g.kind) {
    case GateKind::ZZ: {
      double t = rad(p[0]);
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = std::exp(-kI * t / 2.0);
      m(1, 1) = m(2, 2) = std::exp(kI * t / 2.0);
      return m;
    }
    case GateKind::CNOT: {
      Matrix2 x;
      x << 0, 1, 1, 0;
      return controlled(x);
    }
    case GateKind::CZ: return controlled(diag2(1.0, -1.0));
    case GateKind::CU1: return controlled(diag2(1.0, std::exp(kI * rad(p[0]))));
    case GateKind::CRy: return controlled(r_matrix(rad(p[0]), pi / 2));
    case GateKind::SWAP: {
      Matrix m = Matrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1.0;
      m(1, 2) = m(2, 1) = 1.0;
      return m;
    }
    case GateKind::CCX: {
      Matrix m = Matrix::Identity(8, 8);
      m(3, 3) = m(7, 7) = 0.0;
      m(3, 7) = m(7, 3) = 1.0;
      return m;
    }
    default:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "no matrix for " + g.to_string());
}

Matrix gate_matrix(GateKind kind, std::span<const Angle> params) {
  std::array<Qubit, kMaxArity> qs{0, 1, 2};
  return gate_matrix(Gate(kind, std::span<const Qubit>(qs.data(), arity(kind)), params));
}

bool in_gate_set(GateSet set, const Gate& g, double eps) {
  auto pulse_ok = [&](Angle theta) {
    return set == GateSet::M || theta.near(0.5, eps) || theta.near(1.0, eps);
  };
  switch (g.kind) {
    case GateKind::Rz: return true;
    case GateKind::R:
    case GateKind::Rx:
    case GateKind::Ry: return pulse_ok(g.p[0]);
    case GateKind::ZZ: return set == GateSet::M || g.p[0].near(0.5, eps);
    default: return false;
  }
}

std::optional<Tk1Angles> zxz_angles(const Matrix2& u) {
  cd det = u.determinant();
  Matrix2 v = u / std::sqrt(det);
  double a00 = std::abs(v(0, 0));
  double a10 = std::abs(v(1, 0));
  double beta = 2.0 * std::atan2(a10, a00);
  double sum = 0.0;
  double diff = 0.0;
  constexpr double kLock = 1e-12;
  if (a10 < kLock) {
    sum = std::arg(v(1, 1) * std::conj(v(0, 0)));
  } else if (a00 < kLock) {
    diff = std::arg(v(1, 0) * std::conj(v(0, 1)));
    sum = diff;
  } else {
    sum = std::arg(v(1, 1) * std::conj(v(0, 0)));
    diff = std::arg(v(1, 0) * std::conj(v(0, 1)));
  }
  double alpha = (sum + diff) / 2.0;
  double gamma = (sum - diff) / 2.0;
  if (a10 < kLock || a00 < kLock) {
    alpha = sum;
    gamma = 0.0;
  }
  // The half-angle split is ambiguous by pi on both outer angles; that flips
  // the sign of beta, so pick the variant that reproduces u.
  auto fidelity = [&](double b) {
    Matrix2 m = rz_matrix(alpha) * r_matrix(b, 0.0) * rz_matrix(gamma);
    return std::abs((m.adjoint() * u).trace());
  };
  if (fidelity(-beta) > fidelity(beta)) beta = -beta;
  Tk1Angles out{Angle::from_radians(alpha), Angle::from_radians(beta), Angle::from_radians(gamma)};
  if (out.beta.is_zero() && (out.alpha + out.gamma).is_zero()) return std::nullopt;
  return out;
}

namespace rules {

namespace {

Gate g1(GateKind k, Qubit q, double a) { return Gate(k, {q}, {a}); }

}  // namespace

std::vector<Gate> cnot_to_zz(Qubit i, Qubit j) {
  return {
      g1(GateKind::Rx, i, 0.5),  g1(GateKind::Rz, i, 1.0),  g1(GateKind::Rx, i, 0.5),
      g1(GateKind::Rz, j, 0.5),  g1(GateKind::Rx, j, 0.5),  Gate(GateKind::ZZ, {i, j}, {0.5}),
      g1(GateKind::Rz, i, 0.5),  g1(GateKind::Rz, j, 0.5),  g1(GateKind::Rx, j, 0.5),
      g1(GateKind::Rz, j, 0.5),
  };
}

std::vector<Gate> zz_to_half_pi(Qubit i, Qubit j, Angle theta) {
  return {
      g1(GateKind::Rz, i, 1.0),
      g1(GateKind::Rz, j, 1.5),
      g1(GateKind::Rx, j, 1.5),
      Gate(GateKind::ZZ, {i, j}, {0.5}),
      g1(GateKind::Rx, j, -theta.half_turns()),
      g1(GateKind::Rz, j, 1.0),
      Gate(GateKind::ZZ, {i, j}, {0.5}),
      g1(GateKind::Rx, j, 0.5),
      g1(GateKind::Rz, j, 0.5),
  };
}

std::vector<Gate> cry_macro(Qubit i, Qubit j, Angle theta) {
  double t = theta.half_turns();
  return {
      g1(GateKind::Rx, j, 1.5),
      g1(GateKind::Rz, j, -t / 2),
      Gate(GateKind::ZZ, {i, j}, {t / 2}),
      g1(GateKind::Rx, j, 0.5),
  };
}

std::vector<Gate> tk1_expand(Qubit q, Angle alpha, Angle beta, Angle gamma) {
  std::vector<Gate> out;
  if (!gamma.is_zero()) out.push_back(g1(GateKind::Rz, q, gamma.half_turns()));
  if (!beta.is_zero()) out.push_back(g1(GateKind::Rx, q, beta.half_turns()));
  if (!alpha.is_zero()) out.push_back(g1(GateKind::Rz, q, alpha.half_turns()));
  return out;
}

std::vector<Gate> rx_restriction(Qubit q, Angle theta) {
  if (theta.is_zero()) return {};
  if (theta.near(0.5) || theta.near(1.0)) return {g1(GateKind::Rx, q, theta.half_turns())};
  if (theta.near(1.5)) return {g1(GateKind::Rx, q, 1.0), g1(GateKind::Rx, q, 0.5)};
  return {
      g1(GateKind::Rz, q, 0.5), g1(GateKind::Rx, q, 0.5), g1(GateKind::Rz, q, theta.half_turns() + 1.0),
      g1(GateKind::Rx, q, 0.5), g1(GateKind::Rz, q, 0.5),
  };
}

std::optional<std::vector<Gate>> zz_restriction(Qubit i, Qubit j, Angle theta) {
  int copies = 0;
  if (theta.near(0.5)) copies = 1;
  else if (theta.near(1.0)) copies = 2;
  else if (theta.near(1.5)) copies = 3;
  else return std::nullopt;
  return std::vector<Gate>(copies, Gate(GateKind::ZZ, {i, j}, {0.5}));
}

std::vector<Gate> toffoli_network(Qubit a, Qubit b, Qubit c) {
  using K = GateKind;
  return {
      Gate(K::H, {c}),       Gate(K::CNOT, {b, c}), Gate(K::Tdg, {c}),     Gate(K::CNOT, {a, c}),
      Gate(K::T, {c}),       Gate(K::CNOT, {b, c}), Gate(K::Tdg, {c}),     Gate(K::CNOT, {a, c}),
      Gate(K::T, {b}),       Gate(K::T, {c}),       Gate(K::H, {c}),       Gate(K::CNOT, {a, b}),
      Gate(K::T, {a}),       Gate(K::Tdg, {b}),     Gate(K::CNOT, {a, b}),
  };
}

std::optional<std::vector<Gate>> to_cnot_network(const Gate& g) {
  using K = GateKind;
  Qubit c = g.q[0];
  Qubit t = g.q[1];
  switch (g.kind) {
    case K::CZ:
      return std::vector<Gate>{Gate(K::H, {t}), Gate(K::CNOT, {c, t}), Gate(K::H, {t})};
    case K::CU1: {
      double l = g.p[0].half_turns();
      return std::vector<Gate>{g1(K::Rz, c, l / 2), Gate(K::CNOT, {c, t}), g1(K::Rz, t, -l / 2),
                               Gate(K::CNOT, {c, t}), g1(K::Rz, t, l / 2)};
    }
    case K::CRy: {
      double th = g.p[0].half_turns();
      return std::vector<Gate>{g1(K::Ry, t, th / 2), Gate(K::CNOT, {c, t}), g1(K::Ry, t, -th / 2),
                               Gate(K::CNOT, {c, t})};
    }
    case K::SWAP:
      return std::vector<Gate>{Gate(K::CNOT, {c, t}), Gate(K::CNOT, {t, c}), Gate(K::CNOT, {c, t})};
    case K::CCX:
      return toffoli_network(g.q[0], g.q[1], g.q[2]);
    default:
      return std::nullopt;
  }
}

std::vector<Gate> to_tk1(const Gate& g) {
  auto angles = zxz_angles(single_qubit_matrix(g));
  if (!angles) return {};
  std::array<Angle, 3> ps{angles->alpha, angles->beta, angles->gamma};
  std::array<Qubit, 1> qs{g.q[0]};
  return {Gate(GateKind::TK1, qs, ps)};
}

}  // namespace rules

namespace {

bool is_kind(const Gate& g, GateKind k) { return g.kind == k; }

std::vector<Gate> single_samples() {
  using K = GateKind;
  return {
      Gate(K::R, {0}, {0.37, 1.21}), Gate(K::Rz, {0}, {0.83}), Gate(K::Rx, {0}, {1.37}),
      Gate(K::Ry, {0}, {0.61}),      Gate(K::X, {0}),          Gate(K::Y, {0}),
      Gate(K::Z, {0}),               Gate(K::H, {0}),          Gate(K::S, {0}),
      Gate(K::Sdg, {0}),             Gate(K::T, {0}),          Gate(K::Tdg, {0}),
      Gate(K::TK1, {0}, {0.3, 0.9, 1.7}), Gate(K::TK1, {0}, {0.0, 1.0, 0.4}),
      Gate(K::TK1, {0}, {1.2, 0.0, 0.3}), Gate(K::Rx, {0}, {1.0}),
  };
}

std::vector<DecompositionRule> build_catalog() {
  using K = GateKind;
  std::vector<DecompositionRule> c;
  c.push_back({"cnot_to_zz", [](const Gate& g) { return is_kind(g, K::CNOT); },
               [](const Gate& g) { return rules::cnot_to_zz(g.q[0], g.q[1]); },
               {Gate(K::CNOT, {0, 1}), Gate(K::CNOT, {1, 0})}});
  c.push_back({"zz_to_half_pi",
               [](const Gate& g) { return is_kind(g, K::ZZ) && !g.p[0].is_half_pi_multiple(); },
               [](const Gate& g) { return rules::zz_to_half_pi(g.q[0], g.q[1], g.p[0]); },
               {Gate(K::ZZ, {0, 1}, {0.3}), Gate(K::ZZ, {1, 0}, {1.1}), Gate(K::ZZ, {0, 1}, {1.77}),
                Gate(K::ZZ, {0, 1}, {0.5})}});
  c.push_back({"cry_macro",
               [](const Gate& g) { return is_kind(g, K::CRy) && Angle(g.p[0].half_turns()).is_pi_multiple(); },
               [](const Gate& g) { return rules::cry_macro(g.q[0], g.q[1], g.p[0]); },
               {Gate(K::CRy, {0, 1}, {1.0}), Gate(K::CRy, {1, 0}, {2.0}), Gate(K::CRy, {0, 1}, {3.0}),
                Gate(K::CRy, {0, 1}, {0.5}), Gate(K::CRy, {0, 1}, {1.5}), Gate(K::CRy, {1, 0}, {0.713})}});
  c.push_back({"tk1_expand", [](const Gate& g) { return is_kind(g, K::TK1); },
               [](const Gate& g) { return rules::tk1_expand(g.q[0], g.p[0], g.p[1], g.p[2]); },
               {Gate(K::TK1, {0}, {0.3, 0.9, 1.7}), Gate(K::TK1, {0}, {0.0, 0.5, 0.0}),
                Gate(K::TK1, {0}, {1.5, 0.0, 0.25})}});
  c.push_back({"rx_restriction", [](const Gate& g) { return is_kind(g, K::Rx); },
               [](const Gate& g) { return rules::rx_restriction(g.q[0], g.p[0]); },
               {Gate(K::Rx, {0}, {0.0}), Gate(K::Rx, {0}, {0.5}), Gate(K::Rx, {0}, {1.0}),
                Gate(K::Rx, {0}, {1.5}), Gate(K::Rx, {0}, {0.25}), Gate(K::Rx, {0}, {1.83})}});
  c.push_back({"zz_restriction",
               [](const Gate& g) { return is_kind(g, K::ZZ) && (g.p[0].near(1.0) || g.p[0].near(1.5)); },
               [](const Gate& g) { return *rules::zz_restriction(g.q[0], g.q[1], g.p[0]); },
               {Gate(K::ZZ, {0, 1}, {1.0}), Gate(K::ZZ, {0, 1}, {1.5})}});
  auto network = [](K k) { return [k](const Gate& g) { return g.kind == k; }; };
  auto net_rhs = [](const Gate& g) { return *rules::to_cnot_network(g); };
  c.push_back({"cz_network", network(K::CZ), net_rhs, {Gate(K::CZ, {0, 1}), Gate(K::CZ, {1, 0})}});
  c.push_back({"cu1_network", network(K::CU1), net_rhs,
               {Gate(K::CU1, {0, 1}, {0.5}), Gate(K::CU1, {1, 0}, {1.37})}});
  c.push_back({"cry_network", network(K::CRy), net_rhs,
               {Gate(K::CRy, {0, 1}, {0.5}), Gate(K::CRy, {1, 0}, {2.0}), Gate(K::CRy, {0, 1}, {3.3})}});
  c.push_back({"swap_network", network(K::SWAP), net_rhs, {Gate(K::SWAP, {0, 1})}});
  c.push_back({"ccx_network", network(K::CCX), net_rhs,
               {Gate(K::CCX, {0, 1, 2}), Gate(K::CCX, {2, 0, 1})}});
  c.push_back({"single_to_tk1", [](const Gate& g) { return g.single_qubit(); },
               [](const Gate& g) { return rules::to_tk1(g); }, single_samples()});
  c.push_back({"rx_to_r", network(K::Rx),
               [](const Gate& g) { return std::vector<Gate>{Gate(K::R, {g.q[0]}, {g.p[0].half_turns(), 0.0})}; },
               {Gate(K::Rx, {0}, {0.5}), Gate(K::Rx, {0}, {1.0})}});
  c.push_back({"ry_to_r", network(K::Ry),
               [](const Gate& g) { return std::vector<Gate>{Gate(K::R, {g.q[0]}, {g.p[0].half_turns(), 0.5})}; },
               {Gate(K::Ry, {0}, {0.5}), Gate(K::Ry, {0}, {1.0})}});
  return c;
}

}  // namespace

const std::vector<DecompositionRule>& rule_catalog() {
  static const std::vector<DecompositionRule> catalog = build_catalog();
  return catalog;
}

const DecompositionRule& find_rule(std::string_view name) {
  for (const auto& r : rule_catalog()) {
    if (r.name == name) return r;
  }
  throw Error(ErrorCode::InvalidArgument, "no rule named " + std::string(name));
}

std::optional<std::vector<Gate>> apply_rule(const DecompositionRule& rule, const Gate& g) {
  if (!rule.matches(g)) return std::nullopt;
  return rule.rhs(g);
}

}  // namespace ionc
