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

#include "qgrad/shift.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qgrad/error.hpp"

namespace qgrad {
namespace {

struct ShiftTerm {
  Occurrence where;
  std::size_t symbol = 0;
  double r = 0.0;
};

std::string FormatEigenvalues(const std::vector<double>& evals) {
  std::string out = "{";
  char buf[32];
  for (std::size_t i = 0; i < evals.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.6g", i ? ", " : "", evals[i]);
    out += buf;
  }
  return out + "}";
}

ShiftTerm MakeTerm(const Circuit& circuit, const Occurrence& occ,
                   std::size_t symbol) {
  const GateOp& op = circuit.ops()[occ.op];
  GeneratorSpec spec;
  try {
    spec = GeneratorOf(op.name(), occ.slot, circuit.ResolvedParams(op));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnsupportedGenerator) throw;
    throw Error(ErrorCode::kNotShiftDifferentiable,
                op.name() + " (gate " + std::to_string(occ.op) +
                    ") is not shift-differentiable in symbol '" +
                    circuit.symbol_name(symbol) + "': " + e.what());
  }
  if (!spec.shift_differentiable()) {
    throw Error(ErrorCode::kNotShiftDifferentiable,
                op.name() + " (gate " + std::to_string(occ.op) +
                    ") is not shift-differentiable in symbol '" +
                    circuit.symbol_name(symbol) + "': generator has " +
                    std::to_string(spec.eigenvalues.size()) +
                    " distinct eigenvalues " +
                    FormatEigenvalues(spec.eigenvalues));
  }
  return {occ, symbol, *spec.shift_constant};
}

// Evaluates the shift pair of every term (sorted by gate position) and
// accumulates into gradients[term.symbol].
void RunShiftTerms(const Circuit& circuit, const StateVector& initial,
                   const Observable& observable,
                   const std::vector<ShiftTerm>& terms,
                   std::vector<double>& gradients, Cost& cost) {
  StateVector prefix = initial;
  std::size_t prefix_end = 0;
  for (const ShiftTerm& term : terms) {
    ApplyOps(circuit, prefix, prefix_end, term.where.op, &cost);
    prefix_end = term.where.op;
    const GateOp& op = circuit.ops()[term.where.op];
    const double delta = kPi / (4 * term.r);
    double f[2];
    for (int k = 0; k < 2; ++k) {
      StateVector state = prefix;
      ApplyGate(state,
                circuit.ShiftedOpMatrix(op, term.where.slot,
                                        k == 0 ? delta : -delta),
                op.targets);
      ++cost.gate_applications;
      ApplyOps(circuit, state, term.where.op + 1, circuit.size(), &cost);
      f[k] = Expectation(state, observable);
      ++cost.expectation_evaluations;
    }
    gradients[term.symbol] += term.r * (f[0] - f[1]);
  }
}

}  // namespace

double ShiftGradient(const Circuit& circuit, const StateVector& initial,
                     const Observable& observable, std::size_t symbol,
                     Cost* cost) {
  CheckDimensions(circuit, initial, observable);
  if (symbol >= circuit.num_symbols()) {
    throw Error(ErrorCode::kArgument, "symbol index out of range");
  }
  std::vector<ShiftTerm> terms;
  for (const Occurrence& occ : circuit.Occurrences(symbol)) {
    terms.push_back(MakeTerm(circuit, occ, symbol));
  }
  std::vector<double> gradients(circuit.num_symbols(), 0.0);
  Cost local;
  RunShiftTerms(circuit, initial, observable, terms, gradients, local);
  if (cost) *cost += local;
  return gradients[symbol];
}

GradientReport AllShiftGradients(const Circuit& circuit,
                                 const StateVector& initial,
                                 const Observable& observable) {
  CheckDimensions(circuit, initial, observable);
  std::vector<ShiftTerm> terms;
  for (std::size_t sym = 0; sym < circuit.num_symbols(); ++sym) {
    for (const Occurrence& occ : circuit.Occurrences(sym)) {
      terms.push_back(MakeTerm(circuit, occ, sym));
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const ShiftTerm& a, const ShiftTerm& b) {
                     return a.where.op < b.where.op;
                   });
  GradientReport report;
  report.engine = "shift";
  report.gradients.assign(circuit.num_symbols(), 0.0);
  for (std::size_t i = 0; i < circuit.num_symbols(); ++i) {
    report.symbols.push_back(circuit.symbol_name(i));
  }
  Cost cost;
  RunShiftTerms(circuit, initial, observable, terms, report.gradients, cost);
  report.expectation_evaluations = cost.expectation_evaluations;
  report.gate_applications = cost.gate_applications;
  return report;
}

double ChainRuleGradient(const Circuit& circuit_template, const ParamMap& map,
                         double theta, const StateVector& initial,
                         const Observable& observable, Cost* cost) {
  const std::vector<double> values = map.values(theta);
  const std::vector<double> derivs = map.derivatives(theta);
  const std::size_t n = circuit_template.num_symbols();
  if (values.size() != n || derivs.size() != n) {
    throw Error(ErrorCode::kArgument,
                "parameter map size does not match the template's symbols");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(derivs[i]) || !std::isfinite(values[i])) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", theta);
      throw SingularityError(theta, "parameter map is singular at theta = " +
                                        std::string(buf) + " (symbol '" +
                                        circuit_template.symbol_name(i) +
                                        "')");
    }
  }
  Circuit circuit = circuit_template;
  for (std::size_t i = 0; i < n; ++i) circuit.SetSymbol(i, values[i]);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (derivs[i] == 0.0) continue;
    total += ShiftGradient(circuit, initial, observable, i, cost) * derivs[i];
  }
  return total;
}

}  // namespace qgrad
