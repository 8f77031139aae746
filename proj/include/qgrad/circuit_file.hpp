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

#include <string>
#include <string_view>

#include "qgrad/circuit.hpp"

namespace qgrad {

// JSON circuit description:
//
//   {
//     "num_qubits": 1,
//     "symbols": {"theta": "pi/3"},
//     "gates": [{"name": "RY", "targets": [0], "params": ["theta"]}],
//     "observable": [{"string": "Z", "weight": 1.0}]
//   }
//
// A string parameter names a declared symbol; otherwise it must be an angle
// literal (see ParseAngle). Symbol values may be numbers or angle literals.
struct CircuitFile {
  Circuit circuit;
  Observable observable;
};

CircuitFile ParseCircuitJson(std::string_view text);
CircuitFile LoadCircuitFile(const std::string& path);

// Symbols keep declaration order; literals are written as numbers.
std::string WriteCircuitJson(const CircuitFile& file);

// Reals and multiples/fractions of pi: "0.25", "1/2", "pi", "-pi/2",
// "3pi/4", "3*pi/4".
double ParseAngle(std::string_view text);

}  // namespace qgrad
