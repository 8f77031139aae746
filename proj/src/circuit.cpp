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

#include "qgrad/circuit.hpp"

#include <cmath>

#include "qgrad/error.hpp"

namespace qgrad {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kDefaultMaxQubits) {
    throw Error(ErrorCode::kCapacity, "circuit qubit count out of range");
  }
}

std::size_t Circuit::AddSymbol(std::string name, double value) {
  if (name.empty()) {
    throw Error(ErrorCode::kValidation, "symbol names must be non-empty");
  }
  if (FindSymbol(name)) {
    throw Error(ErrorCode::kValidation, "duplicate symbol '" + name + "'");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kValidation,
                "symbol '" + name + "' has a non-finite value");
  }
  symbol_names_.push_back(std::move(name));
  symbol_values_.push_back(value);
  return symbol_names_.size() - 1;
}

std::optional<std::size_t> Circuit::FindSymbol(std::string_view name) const {
  for (std::size_t i = 0; i < symbol_names_.size(); ++i) {
    if (symbol_names_[i] == name) return i;
  }
  return std::nullopt;
}

SymbolRef Circuit::Sym(std::string_view name) const {
  auto idx = FindSymbol(name);
  if (!idx) {
    throw Error(ErrorCode::kValidation,
                "undeclared symbol '" + std::string(name) + "'");
  }
  return SymbolRef{*idx};
}

void Circuit::Add(std::string_view gate, std::vector<int> targets,
                  std::vector<ParamRef> params) {
  const GateDef* def = FindGate(gate);
  if (def == nullptr) {
    throw Error(ErrorCode::kValidation,
                "unknown gate '" + std::string(gate) + "'");
  }
  if (static_cast<int>(targets.size()) != def->arity) {
    throw Error(ErrorCode::kValidation,
                def->name + " acts on " + std::to_string(def->arity) +
                    " qubit(s), got " + std::to_string(targets.size()));
  }
  for (int t : targets) {
    if (t < 0 || t >= num_qubits_) {
      throw Error(ErrorCode::kValidation,
                  def->name + " target " + std::to_string(t) +
                      " out of range");
    }
  }
  if (targets.size() == 2 && targets[0] == targets[1]) {
    throw Error(ErrorCode::kValidation, def->name + " has duplicate targets");
  }
  if (params.size() != def->num_params()) {
    throw Error(ErrorCode::kValidation,
                def->name + " takes " + std::to_string(def->num_params()) +
                    " parameter(s), got " + std::to_string(params.size()));
  }
  for (const ParamRef& p : params) {
    if (const auto* sym = std::get_if<SymbolRef>(&p)) {
      if (sym->index >= symbol_names_.size()) {
        throw Error(ErrorCode::kValidation, "symbol reference out of range");
      }
    } else if (!std::isfinite(std::get<double>(p))) {
      throw Error(ErrorCode::kValidation,
                  def->name + " has a non-finite literal parameter");
    }
  }
  ops_.push_back(GateOp{def, std::move(targets), std::move(params)});
}

std::vector<double> Circuit::ResolvedParams(const GateOp& op) const {
  std::vector<double> values;
  values.reserve(op.params.size());
  for (const ParamRef& p : op.params) {
    if (const auto* sym = std::get_if<SymbolRef>(&p)) {
      values.push_back(symbol_values_[sym->index]);
    } else {
      values.push_back(std::get<double>(p));
    }
  }
  return values;
}

Matrix Circuit::OpMatrix(const GateOp& op) const {
  return op.def->matrix(ResolvedParams(op));
}

Matrix Circuit::ShiftedOpMatrix(const GateOp& op, int slot,
                                double delta) const {
  std::vector<double> values = ResolvedParams(op);
  values.at(slot) += delta;
  return op.def->matrix(values);
}

std::vector<Occurrence> Circuit::Occurrences(std::size_t symbol) const {
  std::vector<Occurrence> out;
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    for (std::size_t s = 0; s < ops_[i].params.size(); ++s) {
      const auto* sym = std::get_if<SymbolRef>(&ops_[i].params[s]);
      if (sym && sym->index == symbol) {
        out.push_back({i, static_cast<int>(s)});
      }
    }
  }
  return out;
}

std::size_t Circuit::NumOccurrences() const {
  std::size_t n = 0;
  for (const GateOp& op : ops_) {
    for (const ParamRef& p : op.params) {
      n += std::holds_alternative<SymbolRef>(p);
    }
  }
  return n;
}

bool operator==(const Circuit& a, const Circuit& b) {
  if (a.num_qubits_ != b.num_qubits_ || a.symbol_names_ != b.symbol_names_ ||
      a.symbol_values_ != b.symbol_values_ || a.ops_.size() != b.ops_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.ops_.size(); ++i) {
    const GateOp& x = a.ops_[i];
    const GateOp& y = b.ops_[i];
    if (x.def != y.def || x.targets != y.targets || x.params != y.params) {
      return false;
    }
  }
  return true;
}

void CheckDimensions(const Circuit& circuit, const StateVector& initial,
                     const Observable& observable) {
  if (initial.num_qubits() != circuit.num_qubits() ||
      observable.num_qubits() != circuit.num_qubits()) {
    throw Error(ErrorCode::kArgument,
                "circuit, state, and observable qubit counts differ");
  }
}

void ApplyOps(const Circuit& circuit, StateVector& state, std::size_t begin,
              std::size_t end, Cost* cost) {
  for (std::size_t i = begin; i < end; ++i) {
    const GateOp& op = circuit.ops()[i];
    ApplyGate(state, circuit.OpMatrix(op), op.targets);
  }
  if (cost) cost->gate_applications += end - begin;
}

StateVector RunCircuit(const Circuit& circuit, const StateVector& initial,
                       Cost* cost) {
  if (initial.num_qubits() != circuit.num_qubits()) {
    throw Error(ErrorCode::kArgument, "state and circuit qubit counts differ");
  }
  StateVector state = initial;
  ApplyOps(circuit, state, 0, circuit.size(), cost);
  return state;
}

double Evaluate(const Circuit& circuit, const StateVector& initial,
                const Observable& observable, Cost* cost) {
  CheckDimensions(circuit, initial, observable);
  const double value =
      Expectation(RunCircuit(circuit, initial, cost), observable);
  if (cost) ++cost->expectation_evaluations;
  return value;
}

}  // namespace qgrad
