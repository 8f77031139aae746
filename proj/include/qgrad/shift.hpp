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
#include <vector>

#include "qgrad/circuit.hpp"
#include "qgrad/report.hpp"

namespace qgrad {

// Derivative of f with respect to circuit symbol `symbol` by the two-point
// shift rule r [f(t + pi/(4r)) - f(t - pi/(4r))], one occurrence at a time.
// Adds 2 expectation evaluations per occurrence to `cost`.
double ShiftGradient(const Circuit& circuit, const StateVector& initial,
                     const Observable& observable, std::size_t symbol,
                     Cost* cost = nullptr);

// Shift gradients of every symbol, sharing prefix states across occurrences.
GradientReport AllShiftGradients(const Circuit& circuit,
                                 const StateVector& initial,
                                 const Observable& observable);

// Maps an outer parameter theta onto the template circuit's symbols, in
// symbol order.
struct ParamMap {
  std::function<std::vector<double>(double)> values;
  std::function<std::vector<double>(double)> derivatives;
};

// sum_i (df/dt_i)(dt_i/dtheta) with df/dt_i from ShiftGradient. Terms whose
// derivative is exactly zero are skipped without evaluations.
double ChainRuleGradient(const Circuit& circuit_template, const ParamMap& map,
                         double theta, const StateVector& initial,
                         const Observable& observable, Cost* cost = nullptr);

}  // namespace qgrad
