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

#pragma once

#include <functional>
#include <span>

#include "qgrad/circuit.hpp"
#include "qgrad/report.hpp"

// Reference implementations used to validate the engines. Nothing here
// calls the strided gate kernels or the gate library's exponentials.
namespace qgrad::oracle {

struct FiniteDiffConfig {
  double step = 1e-5;  // central scheme, O(h^2) truncation
};

// (f(theta + h) - f(theta - h)) / (2h).
double FiniteDifference(const std::function<double(double)>& f, double theta,
                        const FiniteDiffConfig& cfg = {});

// Central differences of Evaluate() in every symbol.
GradientReport FiniteDifferenceGradients(const Circuit& circuit,
                                         const StateVector& initial,
                                         const Observable& observable,
                                         const FiniteDiffConfig& cfg = {});

inline constexpr int kDenseMaxQubits = 10;

// Full-register matrix of a gate on `targets` via Kronecker product with the
// identity followed by a qubit permutation.
Matrix EmbedGate(const Matrix& gate, std::span<const int> targets,
                 int num_qubits);

// Product of embedded gate matrices in circuit order.
Matrix DenseCircuitUnitary(const Circuit& circuit);

// <psi| U^dag A U |psi> by dense matrix algebra.
double DenseExpectation(const Circuit& circuit, const StateVector& initial,
                        const Observable& observable);

// exp(-i t H) by Pade approximation (Eigen MatrixFunctions).
Matrix DenseExpm(const Matrix& hermitian, double t);

// ||U - e^{i phi} V||_max with phi = arg Tr(V^dag U); +inf when
// |Tr(V^dag U)| < 1e-12 and the phase is undefined.
double PhaseResidual(const Matrix& u, const Matrix& v);

bool EqualUpToPhase(const Matrix& u, const Matrix& v, double tol);

}  // namespace qgrad::oracle
