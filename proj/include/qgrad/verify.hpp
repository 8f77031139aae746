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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qgrad/circuit.hpp"

namespace qgrad {

struct RandomCircuitOptions {
  int min_qubits = 1;
  int max_qubits = 4;
  int max_depth = 8;
  // Adds CR gates with c != 0, which only the adjoint engines handle.
  bool include_cr = false;
  // Adds H, S, X, CNOT.
  bool include_fixed = true;
};

Circuit RandomCircuit(std::mt19937_64& rng, const RandomCircuitOptions& opts);

// 1-3 Pauli strings with weights in [-1, 1].
Observable RandomPauliObservable(std::mt19937_64& rng, int num_qubits);

struct VerifyCheck {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double max_error = 0.0;  // worst error relative to the check's tolerance
  std::string first_failure;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<VerifyCheck> checks;

  bool passed() const;
  std::string Format() const;
};

// Randomized cross-engine suite: shift vs finite differences, middle-out vs
// backprop and finite differences, adjoint cost counters, CR reconstruction
// and CR gradient concordance. Deterministic for a given seed.
VerifyReport RunVerification(std::uint64_t seed, std::size_t trials);

}  // namespace qgrad
