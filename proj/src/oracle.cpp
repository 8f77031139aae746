// Copyright 2026 The qgrad Authors. All Rights Reserved.
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

#include "qgrad/oracle.hpp"

#include <cmath>
#include <limits>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "qgrad/error.hpp"

namespace qgrad::oracle {

double FiniteDifference(const std::function<double(double)>& f, double theta,
                        const FiniteDiffConfig& cfg) {
  if (!(cfg.step > 0)) {
    throw Error(ErrorCode::kOracle, "finite-difference step must be positive");
  }
  const double hi = f(theta + cfg.step);
  const double lo = f(theta - cfg.step);
  if (!std::isfinite(hi) || !std::isfinite(lo)) {
    throw Error(ErrorCode::kOracle, "non-finite function value");
  }
  return (hi - lo) / (2 * cfg.step);
}

GradientReport FiniteDifferenceGradients(const Circuit& circuit,
                                         const StateVector& initial,
                                         const Observable& observable,
                                         const FiniteDiffConfig& cfg) {
  GradientReport report;
  report.engine = "fd";
  Circuit work = circuit;
  Cost cost;
  for (std::size_t i = 0; i < circuit.num_symbols(); ++i) {
    report.symbols.push_back(circuit.symbol_name(i));
    const double base = circuit.symbol_value(i);
    report.gradients.push_back(FiniteDifference(
        [&](double v) {
          work.SetSymbol(i, v);
          return Evaluate(work, initial, observable, &cost);
        },
        base, cfg));
    work.SetSymbol(i, base);
  }
  report.expectation_evaluations = cost.expectation_evaluations;
  report.gate_applications = cost.gate_applications;
  return report;
}

Matrix EmbedGate(const Matrix& gate, std::span<const int> targets,
                 int num_qubits) {
  const int k = static_cast<int>(targets.size());
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  const Eigen::Index rest = Eigen::Index{1} << (num_qubits - k);
  const Matrix stacked =
      Eigen::kroneckerProduct(gate, Matrix::Identity(rest, rest)).eval();

  // Qubit order of `stacked`: targets first, then the others ascending.
  std::vector<int> order(targets.begin(), targets.end());
  for (int q = 0; q < num_qubits; ++q) {
    bool is_target = false;
    for (int t : targets) is_target |= (t == q);
    if (!is_target) order.push_back(q);
  }
  // perm(i, j) = 1 when stacked basis index j names standard basis index i.
  Matrix perm = Matrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    Eigen::Index i = 0;
    for (int pos = 0; pos < num_qubits; ++pos) {
      const Eigen::Index bit = (j >> (num_qubits - 1 - pos)) & 1;
      i |= bit << (num_qubits - 1 - order[pos]);
    }
    perm(i, j) = 1.0;
  }
  return perm * stacked * perm.transpose();
}

Matrix DenseCircuitUnitary(const Circuit& circuit) {
  const int n = circuit.num_qubits();
  if (n > kDenseMaxQubits) {
    throw Error(ErrorCode::kCapacity,
                "dense circuit unitary limited to 10 qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix u = Matrix::Identity(dim, dim);
  for (const GateOp& op : circuit.ops()) {
    u = EmbedGate(circuit.OpMatrix(op), op.targets, n) * u;
  }
  return u;
}

double DenseExpectation(const Circuit& circuit, const StateVector& initial,
                        const Observable& observable) {
  const Matrix u = DenseCircuitUnitary(circuit);
  const Eigen::Map<const Eigen::VectorXcd> psi(
      initial.amplitudes().data(),
      static_cast<Eigen::Index>(initial.dim()));
  const Eigen::VectorXcd out = u * psi;
  return (out.adjoint() * observable.Dense() * out)(0, 0).real();
}

Matrix DenseExpm(const Matrix& hermitian, double t) {
  const Matrix scaled = Complex(0.0, -t) * hermitian;
  return scaled.exp();
}

double PhaseResidual(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw Error(ErrorCode::kArgument, "phase comparison of unequal shapes");
  }
  const Complex overlap = (v.adjoint() * u).trace();
  if (std::abs(overlap) < 1e-12) {
    return std::numeric_limits<double>::infinity();
  }
  const Complex phase = std::polar(1.0, std::arg(overlap));
  return (u - phase * v).cwiseAbs().maxCoeff();
}

bool EqualUpToPhase(const Matrix& u, const Matrix& v, double tol) {
  return PhaseResidual(u, v) < tol;
}

}  // namespace qgrad::oracle
