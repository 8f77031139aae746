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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qgrad/cr.hpp"
#include "qgrad/error.hpp"
#include "qgrad/middleout.hpp"
#include "qgrad/oracle.hpp"
#include "qgrad/shift.hpp"
#include "qgrad/verify.hpp"

namespace qgrad {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int g_failures = 0;

void Report(int id, const char* name, const Outcome& o) {
  std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name,
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++g_failures;
}

std::string Fmt(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string Fmt(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

double Tolerance(double g) { return std::max(1e-7, 1e-6 * std::abs(g)); }

Matrix DirectCr(double s, double b, double c) {
  return oracle::DenseExpm(CrHamiltonian(b, c), kPi / 2 * s);
}

StateVector RandomState(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0;
  for (Complex& a : amps) {
    a = Complex(g(rng), g(rng));
    norm += std::norm(a);
  }
  for (Complex& a : amps) a /= std::sqrt(norm);
  return StateVector(n, std::move(amps));
}

Outcome ShiftExactness() {
  const auto start = Clock::now();
  const Observable z = Observable::FromPauliTerms(1, {{"Z", 1.0}});
  const StateVector zero = NewZeroState(1);
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    const double theta = -kPi + 2 * kPi * k / 49;
    Circuit c(1);
    c.AddSymbol("theta", theta);
    c.Add("RY", {0}, {c.Sym("theta")});
    worst = std::max(worst, std::abs(ShiftGradient(c, zero, z, 0) +
                                     std::sin(theta)));
  }
  const double t = Seconds(start);
  return {worst <= 1e-12 && t < 1.0,
          Fmt("max |shift + sin| = %.3g over 50 points (tol 1e-12), %.4f s",
              worst, t)};
}

Outcome CrossEngine() {
  const auto start = Clock::now();
  std::mt19937_64 rng(2024);
  RandomCircuitOptions opts;
  opts.max_qubits = 4;
  opts.max_depth = 12;
  int shift_runs = 0;
  int violations = 0;
  double worst = 0;  // error / tolerance
  std::string first;
  for (int trial = 0; trial < 200; ++trial) {
    // Alternate so roughly half the circuits carry driven CR gates.
    opts.include_cr = trial % 2 == 1;
    const Circuit c = RandomCircuit(rng, opts);
    const Observable obs = RandomPauliObservable(rng, c.num_qubits());
    const StateVector zero = NewZeroState(c.num_qubits());
    std::vector<GradientReport> reports = {
        MiddleOutGradients(c, zero, obs),
        BackpropReferenceGradients(c, zero, obs),
        oracle::FiniteDifferenceGradients(c, zero, obs)};
    try {
      reports.push_back(AllShiftGradients(c, zero, obs));
      ++shift_runs;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotShiftDifferentiable) throw;
    }
    for (std::size_t i = 0; i < c.num_symbols(); ++i) {
      for (std::size_t a = 0; a < reports.size(); ++a) {
        for (std::size_t b = a + 1; b < reports.size(); ++b) {
          const double ga = reports[a].gradients[i];
          const double gb = reports[b].gradients[i];
          const double ratio = std::abs(ga - gb) / Tolerance(ga);
          worst = std::max(worst, ratio);
          if (ratio > 1) {
            if (violations++ == 0) {
              first = Fmt(" first: trial %d %s vs %s", trial,
                          reports[a].engine.c_str(), reports[b].engine.c_str());
            }
          }
        }
      }
    }
  }
  const double t = Seconds(start);
  return {violations == 0 && t < 30.0,
          Fmt("200 circuits (%d with shift), worst error/tol %.3g, %.2f s%s",
              shift_runs, worst, t, first.c_str())};
}

Outcome Reconstruction() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> us(0, 2), ub(0.25, 2), uc(-2, 2);
  double worst_canonical = 0, worst_binary = 0;
  for (int k = 0; k < 500; ++k) {
    const CrParams p{us(rng), ub(rng), uc(rng)};
    const Matrix direct = DirectCr(p.s, p.b, p.c);
    worst_canonical = std::max(
        worst_canonical,
        oracle::PhaseResidual(
            oracle::DenseCircuitUnitary(CrCanonicalCircuit(p)), direct));
    worst_binary = std::max(
        worst_binary,
        oracle::PhaseResidual(oracle::DenseCircuitUnitary(CrBinaryCircuit(p)),
                              direct));
  }
  return {worst_canonical <= 1e-9 && worst_binary <= 1e-9,
          Fmt("500 draws, max residual canonical %.3g, binary %.3g (tol 1e-9)",
              worst_canonical, worst_binary)};
}

Outcome CrGradientPaths() {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> us(0, 2), ub(0.25, 2), umag(0.25, 2);
  std::bernoulli_distribution sign;
  int points = 0;
  int bad_counts = 0;
  double worst_chain = 0, worst_binary = 0;
  while (points < 100) {
    const CrParams p{us(rng), ub(rng), sign(rng) ? umag(rng) : -umag(rng)};
    const CrCanonicalParams principal = CrCanonicalParameters(p);
    if (!principal.dt1_ds || !principal.dt7_ds) continue;
    const StateVector psi = RandomState(rng, 2);
    const Observable obs = RandomPauliObservable(rng, 2);
    const double fd = oracle::FiniteDifference(
        [&](double s) {
          Circuit c(2);
          c.Add("CR", {0, 1}, {s, p.b, p.c});
          return Evaluate(c, psi, obs);
        },
        p.s);
    Cost chain_cost, binary_cost;
    const double chain = CrChainGradient(p, psi, obs, &chain_cost);
    const double binary = CrBinaryGradient(p, psi, obs, &binary_cost);
    if (chain_cost.expectation_evaluations != 8 ||
        binary_cost.expectation_evaluations != 4) {
      ++bad_counts;
    }
    worst_chain = std::max(worst_chain, std::abs(chain - fd));
    worst_binary = std::max(worst_binary, std::abs(binary - fd));
    ++points;
  }
  return {bad_counts == 0 && worst_chain <= 1e-6 && worst_binary <= 1e-6,
          Fmt("100 points, max |chain - fd| %.3g, max |binary - fd| %.3g "
              "(tol 1e-6), evaluation-count mismatches %d (want 8 and 4)",
              worst_chain, worst_binary, bad_counts)};
}

Circuit ParameterizedCircuit(std::mt19937_64& rng, int num_qubits,
                             int num_gates) {
  static const char* kOne[] = {"RX", "RY", "RZ", "XPow", "YPow"};
  static const char* kTwo[] = {"XX", "YY", "ZZ"};
  std::uniform_real_distribution<double> u(-2, 2);
  std::uniform_int_distribution<int> q(0, num_qubits - 1);
  Circuit c(num_qubits);
  for (int k = 0; k < num_gates; ++k) {
    const std::string name = "p" + std::to_string(k);
    const SymbolRef sym{c.AddSymbol(name, u(rng))};
    if (num_qubits > 1 && k % 2 == 1) {
      const int a = q(rng);
      c.Add(kTwo[k % 3], {a, (a + 1) % num_qubits}, {sym});
    } else {
      c.Add(kOne[k % 5], {q(rng)}, {sym});
    }
  }
  return c;
}

Outcome MiddleOutCost() {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> qubits(1, 6), gates(1, 60);
  int runs = 0, violations = 0;
  for (; runs < 300; ++runs) {
    const Circuit c = ParameterizedCircuit(rng, qubits(rng), gates(rng));
    const GradientReport r = MiddleOutGradients(
        c, NewZeroState(c.num_qubits()),
        RandomPauliObservable(rng, c.num_qubits()));
    const MiddleOutCounters& k = *r.counters;
    const std::size_t n = c.size();
    if (k.gate_applications > 4 * n || k.generator_applications != n ||
        k.inner_products != n || k.live_states > 3) {
      ++violations;
    }
  }
  // Wall-clock ratio, reported only.
  const Circuit big = ParameterizedCircuit(rng, 16, 100);
  const StateVector zero = NewZeroState(16);
  const Observable obs = RandomPauliObservable(rng, 16);
  auto start = Clock::now();
  const int reps = 3;
  for (int i = 0; i < reps; ++i) Evaluate(big, zero, obs);
  const double eval = Seconds(start) / reps;
  start = Clock::now();
  for (int i = 0; i < reps; ++i) MiddleOutGradients(big, zero, obs);
  const double grad = Seconds(start) / reps;
  return {violations == 0,
          Fmt("%d runs, counter violations %d; wall-clock ratio gradient/"
              "evaluation %.2f (16 qubits, 100 gates, not gated)",
              runs, violations, grad / eval)};
}

struct CsvRow {
  std::vector<std::string> cells;
};

std::vector<CsvRow> ReadCsv(const std::string& path) {
  std::ifstream in(path);
  std::vector<CsvRow> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    CsvRow row;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
      row.cells.push_back(cell);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Checks one sweep CSV: finite derivative cells match central differences
// of the value functions, and between neighboring rows the value columns
// move in the direction of their derivatives.
std::string CheckSweepCsv(const std::string& path, double b, int& bad) {
  const std::vector<CsvRow> rows = ReadCsv(path);
  const int kCol[2][2] = {{1, 4}, {3, 6}};  // (value, derivative): t1, t7
  int compared = 0, singular = 0;
  double worst = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i].cells;
    const double s = std::stod(r[0]);
    for (const auto& col : kCol) {
      if (r[col[1]] == "SINGULAR") {
        ++singular;
        continue;
      }
      const double d = std::stod(r[col[1]]);
      auto value = [&](double x) {
        const CrCanonicalParams p = CrCanonicalParameters({x, b, 0.0});
        return col[0] == 1 ? p.t1 : p.t7;
      };
      const double h = 1e-5;
      // The stencil must stay on one side of the fold sin(pi k s / 2) = 0.
      const CrCanonicalParams lo = CrCanonicalParameters({s - h, b, 0.0});
      const CrCanonicalParams hi = CrCanonicalParameters({s + h, b, 0.0});
      if (!lo.dt7_ds || !hi.dt7_ds) continue;
      const double k = std::sqrt(1 + b * b);
      if (std::sin(kPi * k * (s - h) / 2) * std::sin(kPi * k * (s + h) / 2) <=
          0) {
        continue;
      }
      const double fd = oracle::FiniteDifference(value, s, {h});
      worst = std::max(worst, std::abs(fd - d));
      if (std::abs(fd - d) > 1e-6) ++bad;
      ++compared;
      // Monotone segments.
      if (i + 1 < rows.size() && rows[i + 1].cells[col[1]] != "SINGULAR") {
        const double d_next = std::stod(rows[i + 1].cells[col[1]]);
        const double dv = std::stod(rows[i + 1].cells[col[0]]) -
                          std::stod(r[col[0]]);
        if (d > 1e-3 && d_next > 1e-3 && dv <= 0) ++bad;
        if (d < -1e-3 && d_next < -1e-3 && dv >= 0) ++bad;
      }
    }
  }
  return Fmt("b=%.2g: %d derivatives checked, %d SINGULAR, max err %.2g", b,
             compared, singular, worst);
}

Outcome SweepStructure(const std::string& out_dir) {
  const std::vector<double> grid = SweepGrid(0, 2, 0.005);
  std::string detail;
  bool pass = true;
  double max_t7[3] = {0, 0, 0};
  const double bs[3] = {0.5, 1.0, 1.5};
  int bad = 0;
  for (int i = 0; i < 3; ++i) {
    const std::vector<CrSweepRow> rows = CrSweep(bs[i], 0.0, grid);
    for (const CrSweepRow& r : rows) {
      max_t7[i] = std::max(max_t7[i], r.params.t7);
    }
    const std::string path =
        out_dir + "/sweep_b" + (i == 0 ? "0.5" : i == 1 ? "1" : "1.5") +
        ".csv";
    {
      std::ofstream out(path);
      WriteSweepCsv(out, rows);
    }
    detail += "; " + CheckSweepCsv(path, bs[i], bad);
  }
  const double half_ref = std::acos(0.6) / kPi;
  pass = std::abs(max_t7[1] - 0.5) <= 1e-4 && max_t7[0] < 0.5 &&
         std::abs(max_t7[0] - half_ref) <= 1e-4 && bad == 0;
  return {pass, Fmt("max t7: b=1 %.6f (want 0.5 +- 1e-4), b=0.5 %.6f "
                    "(want %.4f < 0.5), b=1.5 %.6f; csv violations %d",
                    max_t7[1], max_t7[0], half_ref, max_t7[2], bad) +
                    detail};
}

Outcome CoordinateCrossCheck() {
  double worst = 0;
  int points = 0;
  for (double b : {0.5, 1.0, 1.5}) {
    for (double s : SweepGrid(0, 2, 0.005)) {
      const double t7 = CrCanonicalParameters({s, b, 0.0}).t7;
      worst = std::max(worst,
                       std::abs(XXCoordinateFromUnitary(DirectCr(s, b, 0.0)) -
                                t7));
      ++points;
    }
  }
  const double cnot = XXCoordinateFromUnitary(StandardGate("CNOT", {}));
  return {worst <= 1e-8 && std::abs(cnot - 0.5) <= 1e-8,
          Fmt("%d grid points, max |xx - t7| %.3g (tol 1e-8); CNOT -> %.12g",
              points, worst, cnot)};
}

Outcome EvaluationCeiling() {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2, 2);
  Circuit c(2);
  int next = 0;
  auto sym = [&] {
    return SymbolRef{c.AddSymbol("p" + std::to_string(next++), u(rng))};
  };
  auto euler = [&](int q) {
    c.Add("RZ", {q}, {sym()});
    c.Add("RY", {q}, {sym()});
    c.Add("RZ", {q}, {sym()});
  };
  euler(0);
  euler(1);
  c.Add("CAN", {0, 1}, {sym(), sym(), sym()});
  euler(0);
  euler(1);
  const Observable obs =
      Observable::FromPauliTerms(2, {{"ZZ", 1.0}, {"XI", 0.5}});
  const GradientReport r = AllShiftGradients(c, NewZeroState(2), obs);
  return {c.num_symbols() == 15 && r.expectation_evaluations <= 30,
          Fmt("%zu parameters, %zu expectation evaluations (ceiling 30)",
              c.num_symbols(), r.expectation_evaluations)};
}

}  // namespace
}  // namespace qgrad

int main(int argc, char** argv) {
  using namespace qgrad;
  std::string out_dir = argc > 1 ? argv[1] : ".";
  std::filesystem::create_directories(out_dir);
  auto run = [](int id, const char* name, const std::function<Outcome()>& f) {
    try {
      Report(id, name, f());
    } catch (const std::exception& e) {
      Report(id, name, {false, std::string("exception: ") + e.what()});
    }
  };
  run(1, "shift-rule exactness", ShiftExactness);
  run(2, "cross-engine concordance", CrossEngine);
  run(3, "CR reconstruction", Reconstruction);
  run(4, "CR gradient paths", CrGradientPaths);
  run(5, "middle-out cost", MiddleOutCost);
  run(6, "sweep structure", [&] { return SweepStructure(out_dir); });
  run(7, "coordinate cross-check", CoordinateCrossCheck);
  run(8, "evaluation-count ceiling", EvaluationCeiling);
  std::printf("%d of 8 criteria passed\n", 8 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
