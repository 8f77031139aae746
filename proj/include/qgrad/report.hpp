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
#include <optional>
#include <string>
#include <vector>

namespace qgrad {

// Operation counts of the adjoint engines. live_states excludes the caller's
// initial state, which is never modified.
struct MiddleOutCounters {
  std::size_t gate_applications = 0;
  std::size_t generator_applications = 0;
  std::size_t inner_products = 0;
  std::size_t live_states = 0;
};

struct GradientReport {
  std::string engine;
  std::vector<std::string> symbols;
  std::vector<double> gradients;  // parallel to symbols
  std::size_t expectation_evaluations = 0;
  std::size_t gate_applications = 0;
  std::optional<MiddleOutCounters> counters;
};

}  // namespace qgrad
