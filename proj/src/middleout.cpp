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

#include "qgrad/middleout.hpp"

#include <optional>

#include "qgrad/error.hpp"

namespace qgrad {
namespace {

struct SlotGenerator {
  std::size_t symbol = 0;
  Matrix generator;
  double scale = 0.0;
};

// Generators of the symbol-bound slots of every op, indexed by op.
std::vector<std::vector<SlotGenerator>> CollectGenerators(
    const Circuit& circuit) {
  std::vector<std::vector<SlotGenerator>> out(circuit.size());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const GateOp& op = circuit.ops()[i];
    const std::vector<double> values = circuit.ResolvedParams(op);
    for (std::size_t slot = 0; slot < op.params.size(); ++slot) {
      const auto* sym = std::get_if<SymbolRef>(&op.params[slot]);
      if (sym == nullptr) continue;
      auto gen = op.def->generator(static_cast<int>(slot), values);
      if (!gen) {
        throw Error(ErrorCode::kUnsupportedGenerator,
                    op.name() + " (gate " + std::to_string(i) +
                        ") has no generator for parameter '" +
                        op.def->parameter_names[slot] + "'");
      }
      out[i].push_back({sym->index, std::move(gen->first), gen->second});
    }
  }
  return out;
}

GradientReport EmptyReport(const Circuit& circuit, const char* engine) {
  GradientReport report;
  report.engine = engine;
  for (std::size_t i = 0; i < circuit.num_symbols(); ++i) {
    report.symbols.push_back(circuit.symbol_name(i));
  }
  report.gradients.assign(circuit.num_symbols(), 0.0);
  report.counters = MiddleOutCounters{};
  return report;
}

void ApplyAdjoint(const Circuit& circuit, StateVector& state, std::size_t op) {
  const GateOp& g = circuit.ops()[op];
  ApplyGate(state, circuit.OpMatrix(g).adjoint(), g.targets);
}

// Adds 2 a Im<bra|G|ket> for every bound slot of `op`.
void Accumulate(const Circuit& circuit, std::size_t op,
                const std::vector<SlotGenerator>& slots,
                const StateVector& bra, const StateVector& ket,
                StateVector& scratch, GradientReport& report) {
  for (const SlotGenerator& slot : slots) {
    scratch = ket;
    ApplyOperator(scratch, slot.generator, circuit.ops()[op].targets);
    const Complex overlap = InnerProduct(bra, scratch);
    report.gradients[slot.symbol] += 2 * slot.scale * overlap.imag();
    ++report.counters->generator_applications;
    ++report.counters->inner_products;
  }
}

}  // namespace

GradientReport MiddleOutGradients(const Circuit& circuit,
                                  const StateVector& initial,
                                  const Observable& observable) {
  CheckDimensions(circuit, initial, observable);
  const auto generators = CollectGenerators(circuit);
  GradientReport report = EmptyReport(circuit, "middleout");
  const std::size_t n = circuit.size();
  if (n == 0) return report;
  MiddleOutCounters& counters = *report.counters;

  // |B_1> = U_2^dag ... U_N^dag A U_N ... U_1 |psi>
  StateVector back = initial;
  Cost cost;
  ApplyOps(circuit, back, 0, n, &cost);
  ApplyHermitian(back, observable);
  for (std::size_t k = n - 1; k >= 1; --k) {
    ApplyAdjoint(circuit, back, k);
    ++cost.gate_applications;
  }
  // |F_1> = U_1 |psi>
  StateVector forward = initial;
  ApplyOps(circuit, forward, 0, 1, &cost);
  StateVector scratch = forward;
  counters.live_states = 3;

  for (std::size_t k = 0; k < n; ++k) {
    Accumulate(circuit, k, generators[k], back, forward, scratch, report);
    if (k + 1 < n) {
      ApplyOps(circuit, forward, k + 1, k + 2, &cost);
      ApplyOps(circuit, back, k + 1, k + 2, &cost);
    }
  }
  counters.gate_applications = cost.gate_applications;
  report.gate_applications = cost.gate_applications;
  return report;
}

GradientReport BackpropReferenceGradients(const Circuit& circuit,
                                          const StateVector& initial,
                                          const Observable& observable,
                                          std::size_t amplitude_cap) {
  CheckDimensions(circuit, initial, observable);
  const std::size_t n = circuit.size();
  if (n > 0 && initial.dim() > amplitude_cap / n) {
    throw Error(ErrorCode::kCapacity,
                "storing " + std::to_string(n) + " states of dimension " +
                    std::to_string(initial.dim()) + " exceeds the cap");
  }
  const auto generators = CollectGenerators(circuit);
  GradientReport report = EmptyReport(circuit, "backprop");
  if (n == 0) return report;
  MiddleOutCounters& counters = *report.counters;

  Cost cost;
  std::vector<StateVector> forward;
  forward.reserve(n);
  StateVector state = initial;
  for (std::size_t k = 0; k < n; ++k) {
    ApplyOps(circuit, state, k, k + 1, &cost);
    forward.push_back(state);
  }
  StateVector back = std::move(state);
  ApplyHermitian(back, observable);
  StateVector scratch = back;
  counters.live_states = forward.size() + 2;

  for (std::size_t k = n; k-- > 0;) {
    Accumulate(circuit, k, generators[k], back, forward[k], scratch, report);
    if (k > 0) {
      ApplyAdjoint(circuit, back, k);
      ++cost.gate_applications;
    }
  }
  counters.gate_applications = cost.gate_applications;
  report.gate_applications = cost.gate_applications;
  return report;
}

}  // namespace qgrad
