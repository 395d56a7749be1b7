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

#include "ionc/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ionc/error.hpp"

namespace ionc {

namespace {

void check_dims(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrices differ in dimension");
  }
}

}  // namespace

void apply_gate(Matrix& u, const Gate& g) {
  const Matrix local = gate_matrix(g);
  const std::size_t m = g.arity();
  const std::size_t k = std::size_t{1} << m;
  const Eigen::Index dim = u.rows();
  std::size_t mask = 0;
  std::array<std::size_t, 8> offset{};
  for (std::size_t s = 0; s < k; ++s) {
    std::size_t off = 0;
    for (std::size_t b = 0; b < m; ++b) {
      if ((s >> b) & 1U) off |= std::size_t{1} << g.q[b];
    }
    offset[s] = off;
  }
  for (std::size_t b = 0; b < m; ++b) mask |= std::size_t{1} << g.q[b];

  std::array<std::complex<double>, 8> in{};
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    auto column = u.col(col);
    for (Eigen::Index base = 0; base < dim; ++base) {
      if (static_cast<std::size_t>(base) & mask) continue;
      for (std::size_t s = 0; s < k; ++s) in[s] = column(base + offset[s]);
      for (std::size_t r = 0; r < k; ++r) {
        std::complex<double> acc = 0.0;
        for (std::size_t s = 0; s < k; ++s) acc += local(r, s) * in[s];
        column(base + offset[r]) = acc;
      }
    }
  }
}

Matrix sequence_unitary(int n, std::span<const Gate> gates, int cap) {
  if (n < 1) throw Error(ErrorCode::InvalidRegister, "need at least one qubit");
  if (n > cap) {
    throw Error(ErrorCode::Capacity,
                std::to_string(n) + " qubits exceed the oracle cap of " + std::to_string(cap));
  }
  Matrix u = Matrix::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (const Gate& g : gates) {
    for (Qubit q : g.qubits()) {
      if (q >= n) throw Error(ErrorCode::MalformedGate, "gate outside register: " + g.to_string());
    }
    apply_gate(u, g);
  }
  return u;
}

Matrix circuit_unitary(const CircuitDag& c, int cap) {
  std::vector<Gate> gates = c.gates();
  return sequence_unitary(c.n(), gates, cap);
}

Matrix permutation_matrix(std::span<const Qubit> perm) {
  const auto n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (Qubit q : perm) {
    if (q < 0 || q >= n || seen[q]) throw Error(ErrorCode::InvalidPermutation, "not a bijection");
    seen[q] = true;
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix p = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    Eigen::Index y = 0;
    for (int k = 0; k < n; ++k) {
      if ((x >> k) & 1) y |= Eigen::Index{1} << perm[k];
    }
    p(y, x) = 1.0;
  }
  return p;
}

double phase_distance(const Matrix& a, const Matrix& b) {
  check_dims(a, b);
  std::complex<double> t = (a * b.adjoint()).trace();
  std::complex<double> c;
  if (std::abs(t) > 1e-6 * static_cast<double>(a.rows())) {
    c = t / std::abs(t);
  } else {
    Eigen::Index r = 0;
    Eigen::Index col = 0;
    b.cwiseAbs().maxCoeff(&r, &col);
    if (std::abs(b(r, col)) == 0.0) return a.norm();
    std::complex<double> ratio = a(r, col) / b(r, col);
    c = std::abs(ratio) > 0 ? ratio / std::abs(ratio) : 1.0;
  }
  return (a - c * b).norm();
}

bool equal_up_to_global_phase(const Matrix& a, const Matrix& b, double tol) {
  return phase_distance(a, b) < tol * static_cast<double>(a.rows());
}

bool equal_up_to_permutation_and_phase(const Matrix& a, const Matrix& b, std::span<const Qubit> perm,
                                       double tol) {
  check_dims(a, b);
  if ((Eigen::Index{1} << perm.size()) != a.rows()) {
    throw Error(ErrorCode::InvalidPermutation, "permutation size does not match the matrix");
  }
  return equal_up_to_global_phase(a, permutation_matrix(perm) * b, tol);
}

bool equal_up_to_diagonal(const Matrix& a, const Matrix& b, double tol) {
  check_dims(a, b);
  Matrix m = a * b.adjoint();
  const double bound = tol * static_cast<double>(a.rows());
  Matrix off = m;
  off.diagonal().setZero();
  if (off.norm() >= bound) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (std::abs(std::abs(m(i, i)) - 1.0) >= bound) return false;
  }
  return true;
}

std::vector<RuleCheck> check_rules(double tol) {
  std::vector<RuleCheck> out;
  for (const DecompositionRule& rule : rule_catalog()) {
    for (const Gate& sample : rule.samples) {
      int n = 0;
      for (Qubit q : sample.qubits()) n = std::max(n, q + 1);
      std::vector<Gate> lhs{sample};
      std::vector<Gate> rhs = rule.rhs(sample);
      double err = phase_distance(sequence_unitary(n, lhs), sequence_unitary(n, rhs));
      double bound = tol * static_cast<double>(std::size_t{1} << n);
      out.push_back({rule.name, sample.to_string(), err, err < bound});
    }
  }
  return out;
}

}  // namespace ionc
