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

#include "qgrad/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qgrad/error.hpp"

namespace qgrad {
namespace {

void CheckTargets(int num_qubits, std::span<const int> targets,
                  const Matrix& op) {
  if (targets.size() != 1 && targets.size() != 2) {
    throw Error(ErrorCode::kArgument, "gates act on 1 or 2 qubits");
  }
  for (int t : targets) {
    if (t < 0 || t >= num_qubits) {
      throw Error(ErrorCode::kArgument,
                  "target qubit " + std::to_string(t) + " out of range for " +
                      std::to_string(num_qubits) + " qubits");
    }
  }
  if (targets.size() == 2 && targets[0] == targets[1]) {
    throw Error(ErrorCode::kArgument, "duplicate target qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << targets.size();
  if (op.rows() != dim || op.cols() != dim) {
    throw Error(ErrorCode::kArgument, "matrix dimension does not match targets");
  }
}

void ApplyOne(std::span<Complex> v, std::size_t bit, const Matrix& u) {
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  const std::size_t dim = v.size();
  for (std::size_t hi = 0; hi < dim; hi += 2 * bit) {
    for (std::size_t i = hi; i < hi + bit; ++i) {
      const Complex a0 = v[i];
      const Complex a1 = v[i | bit];
      v[i] = u00 * a0 + u01 * a1;
      v[i | bit] = u10 * a0 + u11 * a1;
    }
  }
}

void ApplyTwo(std::span<Complex> v, std::size_t bit0, std::size_t bit1,
              const Matrix& u) {
  const std::size_t dim = v.size();
  const std::size_t both = bit0 | bit1;
  Complex in[4];
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & both) continue;
    const std::size_t idx[4] = {i, i | bit1, i | bit0, i | both};
    for (int k = 0; k < 4; ++k) in[k] = v[idx[k]];
    for (int r = 0; r < 4; ++r) {
      v[idx[r]] = u(r, 0) * in[0] + u(r, 1) * in[1] + u(r, 2) * in[2] +
                  u(r, 3) * in[3];
    }
  }
}

void ApplyStrided(StateVector& state, const Matrix& op,
                  std::span<const int> targets) {
  const int n = state.num_qubits();
  std::span<Complex> amps = state.mutable_amplitudes();
  if (targets.size() == 1) {
    ApplyOne(amps, QubitMask(n, targets[0]), op);
  } else {
    ApplyTwo(amps, QubitMask(n, targets[0]), QubitMask(n, targets[1]), op);
  }
}

// Applies weight * P to `in`, accumulating into `out`.
void AccumulatePauli(const PauliTerm& term, std::span<const Complex> in,
                     std::span<Complex> out) {
  const int n = static_cast<int>(term.paulis.size());
  std::size_t flip = 0;
  std::size_t sign_mask = 0;
  int num_y = 0;
  for (int q = 0; q < n; ++q) {
    const std::size_t bit = QubitMask(n, q);
    switch (term.paulis[q]) {
      case 'X': flip |= bit; break;
      case 'Y': flip |= bit; sign_mask |= bit; ++num_y; break;
      case 'Z': sign_mask |= bit; break;
      default: break;
    }
  }
  // Y|b> = i (-1)^b |1-b>, so the phase is i^{#Y} * (-1)^{popcount(i & mask)}.
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Complex base = term.weight * kIPow[num_y % 4];
  for (std::size_t i = 0; i < in.size(); ++i) {
    const bool odd = std::popcount(i & sign_mask) & 1;
    out[i ^ flip] += (odd ? -base : base) * in[i];
  }
}

}  // namespace

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes,
                         bool normalized)
    : num_qubits_(num_qubits),
      amplitudes_(std::move(amplitudes)),
      normalized_(normalized) {
  if (num_qubits < 1 || num_qubits > 62) {
    throw Error(ErrorCode::kCapacity, "invalid qubit count");
  }
  if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
    throw Error(ErrorCode::kArgument,
                "amplitude count must equal 2^num_qubits");
  }
}

double StateVector::SquaredNorm() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return sum;
}

StateVector NewZeroState(int num_qubits, int max_qubits) {
  if (num_qubits < 1 || num_qubits > max_qubits) {
    throw Error(ErrorCode::kCapacity,
                "num_qubits must be in [1, " + std::to_string(max_qubits) +
                    "], got " + std::to_string(num_qubits));
  }
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  amps[0] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

Observable Observable::FromPauliTerms(int num_qubits,
                                      std::vector<PauliTerm> terms) {
  if (num_qubits < 1) {
    throw Error(ErrorCode::kArgument, "observable needs at least one qubit");
  }
  for (const PauliTerm& t : terms) {
    if (static_cast<int>(t.paulis.size()) != num_qubits) {
      throw Error(ErrorCode::kValidation,
                  "Pauli string '" + t.paulis + "' must have length " +
                      std::to_string(num_qubits));
    }
    for (char c : t.paulis) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw Error(ErrorCode::kValidation,
                    "Pauli string '" + t.paulis + "' has invalid label");
      }
    }
    if (!std::isfinite(t.weight)) {
      throw Error(ErrorCode::kValidation, "Pauli weight must be finite");
    }
  }
  Observable obs;
  obs.num_qubits_ = num_qubits;
  obs.terms_ = std::move(terms);
  return obs;
}

Observable Observable::FromDense(Matrix matrix) {
  if (!IsSquare(matrix) || !std::has_single_bit(
                               static_cast<std::size_t>(matrix.rows())) ||
      matrix.rows() < 2) {
    throw Error(ErrorCode::kArgument,
                "dense observable must be square with power-of-two dimension");
  }
  if (!IsHermitian(matrix, 1e-12)) {
    throw Error(ErrorCode::kValidation, "observable is not Hermitian");
  }
  Observable obs;
  obs.num_qubits_ =
      std::countr_zero(static_cast<std::size_t>(matrix.rows()));
  obs.dense_ = std::move(matrix);
  return obs;
}

Observable Observable::Identity(int num_qubits) {
  return FromPauliTerms(num_qubits, {{std::string(num_qubits, 'I'), 1.0}});
}

Matrix Observable::Dense() const {
  if (!is_pauli_sum()) return dense_;
  const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
  Matrix sum = Matrix::Zero(dim, dim);
  for (const PauliTerm& t : terms_) {
    Matrix m = pauli::FromChar(t.paulis[0]);
    for (std::size_t q = 1; q < t.paulis.size(); ++q) {
      m = Kron(m, pauli::FromChar(t.paulis[q]));
    }
    sum += t.weight * m;
  }
  return sum;
}

Observable Observable::operator+(const Observable& other) const {
  if (num_qubits_ != other.num_qubits_) {
    throw Error(ErrorCode::kArgument, "observable dimensions differ");
  }
  if (is_pauli_sum() && other.is_pauli_sum()) {
    std::vector<PauliTerm> terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return FromPauliTerms(num_qubits_, std::move(terms));
  }
  return FromDense(Dense() + other.Dense());
}

bool operator==(const Observable& a, const Observable& b) {
  if (a.num_qubits_ != b.num_qubits_ || a.terms_ != b.terms_) return false;
  if (a.dense_.size() != b.dense_.size()) return false;
  return a.dense_.size() == 0 || a.dense_ == b.dense_;
}

void ApplyGate(StateVector& state, const Matrix& unitary,
               std::span<const int> targets) {
  CheckTargets(state.num_qubits(), targets, unitary);
  if (!IsUnitary(unitary, 1e-10)) {
    throw Error(ErrorCode::kValidation, "gate matrix is not unitary");
  }
  ApplyStrided(state, unitary, targets);
}

void ApplyOperator(StateVector& state, const Matrix& op,
                   std::span<const int> targets) {
  CheckTargets(state.num_qubits(), targets, op);
  ApplyStrided(state, op, targets);
  state.MarkUnnormalized();
}

void ApplyHermitian(StateVector& state, const Observable& observable) {
  if (observable.num_qubits() != state.num_qubits()) {
    throw Error(ErrorCode::kArgument,
                "observable and state have different qubit counts");
  }
  std::span<Complex> amps = state.mutable_amplitudes();
  std::vector<Complex> out(amps.size());
  if (observable.is_pauli_sum()) {
    for (const PauliTerm& t : observable.terms()) {
      AccumulatePauli(t, amps, out);
    }
  } else {
    const Matrix a = observable.Dense();
    const Eigen::Map<const Eigen::VectorXcd> in(
        amps.data(), static_cast<Eigen::Index>(amps.size()));
    Eigen::Map<Eigen::VectorXcd>(out.data(),
                                 static_cast<Eigen::Index>(out.size())) =
        a * in;
  }
  std::copy(out.begin(), out.end(), amps.begin());
  state.MarkUnnormalized();
}

Complex InnerProduct(const StateVector& bra, const StateVector& ket) {
  if (bra.num_qubits() != ket.num_qubits()) {
    throw Error(ErrorCode::kArgument,
                "inner product of states with different qubit counts");
  }
  Complex sum = 0.0;
  for (std::size_t i = 0; i < bra.dim(); ++i) {
    sum += std::conj(bra[i]) * ket[i];
  }
  return sum;
}

double Expectation(const StateVector& state, const Observable& observable) {
  if (!state.normalized()) {
    throw Error(ErrorCode::kArgument, "expectation of an unnormalized state");
  }
  StateVector applied = state;
  ApplyHermitian(applied, observable);
  const Complex value = InnerProduct(state, applied);
  if (std::abs(value.imag()) >= 1e-10) {
    throw Error(ErrorCode::kValidation,
                "expectation has non-negligible imaginary part");
  }
  return value.real();
}

}  // namespace qgrad
