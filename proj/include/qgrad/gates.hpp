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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qgrad/linalg.hpp"

namespace qgrad {

// Hermitian generator G and scale a of a gate exp(-i a theta G), with the
// distinct eigenvalues of G and, when there are exactly two, the shift
// constant r = (a/2)(e1 - e0).
struct GeneratorSpec {
  Matrix generator;
  double scale = 0.0;
  std::vector<double> eigenvalues;      // cluster representatives, ascending
  std::optional<double> shift_constant;  // r
  double eigen_offset = 0.0;            // (e1 + e0)/2; phase bookkeeping only

  bool shift_differentiable() const { return shift_constant.has_value(); }
};

inline constexpr double kEigenClusterTol = 1e-8;

GeneratorSpec AnalyzeGenerator(Matrix generator, double scale,
                               double cluster_tol = kEigenClusterTol);

struct GateDef {
  std::string name;
  int arity = 1;
  std::vector<std::string> parameter_names;
  std::function<Matrix(std::span<const double>)> matrix;
  // (G, a) such that the gate varies as exp(-i a theta G) in `slot` with the
  // other parameters held fixed; empty when no such form exists.
  std::function<std::optional<std::pair<Matrix, double>>(
      int slot, std::span<const double> params)>
      generator;

  std::size_t num_params() const { return parameter_names.size(); }
};

// Registered gates: RX RY RZ XPow YPow ZPow H S X CNOT XX YY ZZ CAN CR MAGIC.
std::span<const GateDef> AllGates();
const GateDef* FindGate(std::string_view name);
const GateDef& LookupGate(std::string_view name);

Matrix StandardGate(std::string_view name, std::span<const double> params);
inline Matrix StandardGate(std::string_view name,
                           std::initializer_list<double> params) {
  return StandardGate(name, std::span<const double>(params.begin(),
                                                    params.size()));
}

// `params` is the gate's full parameter list; it is needed when the
// generator depends on the other parameters (CR depends on b and c). For
// single-parameter gates it may be empty.
GeneratorSpec GeneratorOf(std::string_view name, int param_index,
                          std::span<const double> params = {});
inline GeneratorSpec GeneratorOf(std::string_view name, int param_index,
                                 std::initializer_list<double> params) {
  return GeneratorOf(name, param_index,
                     std::span<const double>(params.begin(), params.size()));
}

// I cos(r theta) - i (a/r) (G - offset) sin(r theta); equals
// exp(-i a theta G) up to global phase.
Matrix EulerForm(const GeneratorSpec& spec, double theta);

// X(x)I - b Z(x)X + c I(x)X.
Matrix CrHamiltonian(double b, double c);

}  // namespace qgrad
