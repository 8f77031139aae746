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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qgrad/linalg.hpp"

namespace qgrad {

// Default register cap: 24 qubits is 256 MiB of complex doubles.
inline constexpr int kDefaultMaxQubits = 24;

// Dense amplitudes over 2^num_qubits basis states. Qubit 0 is the most
// significant bit of the basis index, so |10> has index 2.
class StateVector {
 public:
  StateVector(int num_qubits, std::vector<Complex> amplitudes,
              bool normalized = true);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> mutable_amplitudes() { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  // False once a non-unitary operator has been applied. Never reset
  // implicitly.
  bool normalized() const { return normalized_; }
  void MarkUnnormalized() { normalized_ = false; }

  double SquaredNorm() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int num_qubits_;
  std::vector<Complex> amplitudes_;
  bool normalized_;
};

StateVector NewZeroState(int num_qubits, int max_qubits = kDefaultMaxQubits);

// Bit mask of `qubit` within a basis index of an n-qubit register.
inline std::size_t QubitMask(int num_qubits, int qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

struct PauliTerm {
  std::string paulis;  // one of I/X/Y/Z per qubit, qubit 0 first
  double weight = 1.0;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

// Hermitian observable, either a real-weighted sum of Pauli strings or a
// dense matrix. Immutable after construction.
class Observable {
 public:
  static Observable FromPauliTerms(int num_qubits,
                                   std::vector<PauliTerm> terms);
  static Observable FromDense(Matrix matrix);
  static Observable Identity(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  bool is_pauli_sum() const { return dense_.size() == 0; }
  const std::vector<PauliTerm>& terms() const { return terms_; }

  // The 2^n x 2^n matrix; Pauli sums are lowered via Kronecker products.
  Matrix Dense() const;

  Observable operator+(const Observable& other) const;

  friend bool operator==(const Observable&, const Observable&);

 private:
  Observable() = default;

  int num_qubits_ = 0;
  std::vector<PauliTerm> terms_;
  Matrix dense_;
};

// Applies a 1- or 2-qubit unitary in place by strided traversal. For two
// targets, targets[0] addresses the more significant bit of the gate matrix.
void ApplyGate(StateVector& state, const Matrix& unitary,
               std::span<const int> targets);

// Same traversal without the unitarity check; the result is flagged
// unnormalized. Used for generators in the adjoint engine.
void ApplyOperator(StateVector& state, const Matrix& op,
                   std::span<const int> targets);

// state <- A * state, flagged unnormalized.
void ApplyHermitian(StateVector& state, const Observable& observable);

Complex InnerProduct(const StateVector& bra, const StateVector& ket);

// Re<psi|A|psi>; the discarded imaginary part must be below 1e-10.
double Expectation(const StateVector& state, const Observable& observable);

}  // namespace qgrad
