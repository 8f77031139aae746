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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qgrad {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

namespace pauli {
Matrix I();
Matrix X();
Matrix Y();
Matrix Z();
// Maps one of 'I', 'X', 'Y', 'Z' to its matrix; argument error otherwise.
Matrix FromChar(char p);
}  // namespace pauli

Matrix Kron(const Matrix& a, const Matrix& b);

bool IsSquare(const Matrix& m);
bool IsUnitary(const Matrix& m, double tol = 1e-10);
bool IsHermitian(const Matrix& m, double tol = 1e-12);

// Largest entrywise modulus.
double MaxAbs(const Matrix& m);

// exp(-i * t * H) for Hermitian H, via a self-adjoint eigendecomposition.
Matrix HermitianExpm(const Matrix& hermitian, double t);

// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> HermitianEigenvalues(const Matrix& hermitian);

// Groups ascending eigenvalues into clusters whose members lie within `tol`
// of the cluster's first member; returns one representative (mean) per
// cluster.
std::vector<double> ClusterEigenvalues(const std::vector<double>& ascending,
                                       double tol = 1e-8);

}  // namespace qgrad
