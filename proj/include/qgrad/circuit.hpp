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
#include <string_view>
#include <variant>
#include <vector>

#include "qgrad/gates.hpp"
#include "qgrad/statevector.hpp"

namespace qgrad {

struct SymbolRef {
  std::size_t index = 0;
  friend bool operator==(SymbolRef, SymbolRef) = default;
};

// A gate parameter: either a literal value or a reference to a circuit
// symbol.
using ParamRef = std::variant<double, SymbolRef>;

struct GateOp {
  const GateDef* def = nullptr;
  std::vector<int> targets;
  std::vector<ParamRef> params;

  const std::string& name() const { return def->name; }
};

// A (gate, parameter slot) pair bound to a symbol.
struct Occurrence {
  std::size_t op = 0;
  int slot = 0;
};

// Ordered gate sequence over named real symbols. A symbol may be bound into
// any number of gate slots.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }

  std::size_t AddSymbol(std::string name, double value);
  std::optional<std::size_t> FindSymbol(std::string_view name) const;
  SymbolRef Sym(std::string_view name) const;

  std::size_t num_symbols() const { return symbol_names_.size(); }
  const std::string& symbol_name(std::size_t i) const {
    return symbol_names_.at(i);
  }
  double symbol_value(std::size_t i) const { return symbol_values_.at(i); }
  void SetSymbol(std::size_t i, double value) { symbol_values_.at(i) = value; }
  const std::vector<double>& symbol_values() const { return symbol_values_; }

  // Validates the gate name, arity, targets, and symbol references.
  void Add(std::string_view gate, std::vector<int> targets,
           std::vector<ParamRef> params = {});

  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

  std::vector<double> ResolvedParams(const GateOp& op) const;
  Matrix OpMatrix(const GateOp& op) const;
  // Matrix with `delta` added to parameter `slot`.
  Matrix ShiftedOpMatrix(const GateOp& op, int slot, double delta) const;

  std::vector<Occurrence> Occurrences(std::size_t symbol) const;
  std::size_t NumOccurrences() const;

  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  int num_qubits_;
  std::vector<std::string> symbol_names_;
  std::vector<double> symbol_values_;
  std::vector<GateOp> ops_;
};

// Logical work done by an engine.
struct Cost {
  std::size_t expectation_evaluations = 0;
  std::size_t gate_applications = 0;

  Cost& operator+=(const Cost& o) {
    expectation_evaluations += o.expectation_evaluations;
    gate_applications += o.gate_applications;
    return *this;
  }
};

void CheckDimensions(const Circuit& circuit, const StateVector& initial,
                     const Observable& observable);

// Applies ops [begin, end) to `state` in place.
void ApplyOps(const Circuit& circuit, StateVector& state, std::size_t begin,
              std::size_t end, Cost* cost = nullptr);

StateVector RunCircuit(const Circuit& circuit, const StateVector& initial,
                       Cost* cost = nullptr);

// f = <psi| U^dagger A U |psi> at the circuit's current symbol values.
double Evaluate(const Circuit& circuit, const StateVector& initial,
                const Observable& observable, Cost* cost = nullptr);

}  // namespace qgrad
