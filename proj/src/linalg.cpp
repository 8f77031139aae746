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

#include "qgrad/linalg.hpp"

#include <cmath>

#include "qgrad/error.hpp"

namespace qgrad {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArgument: return "argument error";
    case ErrorCode::kCapacity: return "capacity error";
    case ErrorCode::kValidation: return "validation error";
    case ErrorCode::kUnsupportedGenerator: return "unsupported generator";
    case ErrorCode::kNotShiftDifferentiable: return "not shift-differentiable";
    case ErrorCode::kSingularity: return "singularity";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kNotXXClass: return "not XX-class";
    case ErrorCode::kOracle: return "oracle error";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "I/O error";
  }
  return "error";
}

namespace pauli {

Matrix I() { return Matrix::Identity(2, 2); }

Matrix X() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix Y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix Z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix FromChar(char p) {
  switch (p) {
    case 'I': return I();
    case 'X': return X();
    case 'Y': return Y();
    case 'Z': return Z();
  }
  throw Error(ErrorCode::kArgument,
              std::string("not a Pauli label: '") + p + "'");
}

}  // namespace pauli

Matrix Kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool IsSquare(const Matrix& m) { return m.rows() == m.cols() && m.rows() > 0; }

double MaxAbs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool IsUnitary(const Matrix& m, double tol) {
  if (!IsSquare(m)) return false;
  const Matrix residual = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return MaxAbs(residual) < tol;
}

bool IsHermitian(const Matrix& m, double tol) {
  if (!IsSquare(m)) return false;
  return MaxAbs(m - m.adjoint()) < tol;
}

Matrix HermitianExpm(const Matrix& hermitian, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian);
  const RealVector& evals = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();
  Eigen::VectorXcd phases(evals.size());
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    phases(i) = std::polar(1.0, -t * evals(i));
  }
  return vecs * phases.asDiagonal() * vecs.adjoint();
}

std::vector<double> HermitianEigenvalues(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian,
                                               Eigen::EigenvaluesOnly);
  const RealVector& evals = solver.eigenvalues();
  return {evals.data(), evals.data() + evals.size()};
}

std::vector<double> ClusterEigenvalues(const std::vector<double>& ascending,
                                       double tol) {
  std::vector<double> reps;
  double first = 0.0;
  double sum = 0.0;
  int count = 0;
  for (double e : ascending) {
    if (count > 0 && std::abs(e - first) <= tol) {
      sum += e;
      ++count;
      continue;
    }
    if (count > 0) reps.push_back(sum / count);
    first = e;
    sum = e;
    count = 1;
  }
  if (count > 0) reps.push_back(sum / count);
  return reps;
}

}  // namespace qgrad
