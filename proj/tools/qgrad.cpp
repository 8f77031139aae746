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

// qgrad command-line tool. Links only the C API.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qgrad/qgrad.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitDiscrepancy = 2;

constexpr double kDiscrepancyTol = 1e-6;

// Prints to 12 significant digits; magnitudes below 1e-13 print as 0.
std::string Num(double v) {
  if (std::isnan(v)) return "SINGULAR";
  if (std::abs(v) < 1e-13) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int Report(qgrad_status status) {
  std::fprintf(stderr, "qgrad: %s: %s\n", qgrad_status_name(status),
               qgrad_last_error());
  return kExitValidation;
}

struct Problem {
  qgrad_problem* handle = nullptr;
  ~Problem() { qgrad_problem_free(handle); }
};

double Angle(const std::string& text, const char* flag) {
  double v = 0.0;
  if (qgrad_parse_angle(text.c_str(), &v) != QGRAD_OK) {
    throw CLI::ValidationError(flag, qgrad_last_error());
  }
  return v;
}

int CmdEval(const std::string& path) {
  Problem p;
  if (auto st = qgrad_problem_load(path.c_str(), &p.handle)) return Report(st);
  double value = 0.0;
  if (auto st = qgrad_evaluate(p.handle, &value)) return Report(st);
  std::printf("%s\n", Num(value).c_str());
  return kExitOk;
}

struct EngineRun {
  const char* name;
  qgrad_engine engine;
  qgrad_status status = QGRAD_OK;
  std::string error;
  std::vector<double> grads;
  qgrad_cost cost{};
};

EngineRun Run(const qgrad_problem* p, const char* name, qgrad_engine engine,
              std::size_t n) {
  EngineRun run{name, engine};
  run.grads.assign(n, 0.0);
  run.status = qgrad_gradients(p, engine, run.grads.data(), n, &run.cost);
  if (run.status != QGRAD_OK) run.error = qgrad_last_error();
  return run;
}

void PrintCost(const EngineRun& r) {
  std::printf("  %-10s expectation_evaluations=%zu gate_applications=%zu",
              r.name, r.cost.expectation_evaluations,
              r.cost.gate_applications);
  if (r.engine == QGRAD_ENGINE_MIDDLEOUT ||
      r.engine == QGRAD_ENGINE_BACKPROP) {
    std::printf(" generator_applications=%zu inner_products=%zu "
                "live_states=%zu gates=%zu",
                r.cost.generator_applications, r.cost.inner_products,
                r.cost.live_states, r.cost.num_gates);
  }
  std::printf("\n");
}

int CmdGrad(const std::string& path, const std::string& engine) {
  Problem p;
  if (auto st = qgrad_problem_load(path.c_str(), &p.handle)) return Report(st);
  std::size_t n = 0;
  qgrad_problem_num_symbols(p.handle, &n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    const char* name = nullptr;
    qgrad_problem_symbol_name(p.handle, i, &name);
    names[i] = name;
  }

  const struct {
    const char* name;
    qgrad_engine engine;
  } kEngines[] = {{"shift", QGRAD_ENGINE_SHIFT},
                  {"middleout", QGRAD_ENGINE_MIDDLEOUT},
                  {"backprop", QGRAD_ENGINE_BACKPROP},
                  {"fd", QGRAD_ENGINE_FD}};

  if (engine != "all") {
    for (const auto& e : kEngines) {
      if (engine != e.name) continue;
      const EngineRun run = Run(p.handle, e.name, e.engine, n);
      if (run.status != QGRAD_OK) {
        std::fprintf(stderr, "qgrad: %s: %s\n", qgrad_status_name(run.status),
                     run.error.c_str());
        return kExitValidation;
      }
      std::printf("engine %s\n", e.name);
      for (std::size_t i = 0; i < n; ++i) {
        std::printf("  d/d%-8s %s\n", names[i].c_str(),
                    Num(run.grads[i]).c_str());
      }
      PrintCost(run);
      return kExitOk;
    }
    std::fprintf(stderr, "qgrad: unknown engine '%s'\n", engine.c_str());
    return kExitValidation;
  }

  std::vector<EngineRun> runs;
  for (const auto& e : kEngines) runs.push_back(Run(p.handle, e.name, e.engine, n));
  std::printf("%-12s", "symbol");
  for (const auto& r : runs) std::printf(" %20s", r.name);
  std::printf("\n");
  for (std::size_t i = 0; i < n; ++i) {
    std::printf("%-12s", names[i].c_str());
    for (const auto& r : runs) {
      std::printf(" %20s",
                  r.status == QGRAD_OK ? Num(r.grads[i]).c_str() : "n/a");
    }
    std::printf("\n");
  }
  double worst = 0.0;
  std::size_t available = 0;
  for (const auto& a : runs) {
    if (a.status != QGRAD_OK) {
      std::printf("%s unavailable: %s\n", a.name, a.error.c_str());
      continue;
    }
    ++available;
    for (const auto& b : runs) {
      if (b.status != QGRAD_OK) continue;
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, std::abs(a.grads[i] - b.grads[i]));
      }
    }
  }
  std::printf("costs:\n");
  for (const auto& r : runs) {
    if (r.status == QGRAD_OK) PrintCost(r);
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", worst);
  std::printf("max pairwise discrepancy %s over %zu engines\n", buf,
              available);
  if (available == 0) return kExitValidation;
  return worst > kDiscrepancyTol ? kExitDiscrepancy : kExitOk;
}

int CmdDecompose(double s, double b, double c) {
  qgrad_cr_decomposition d{};
  if (auto st = qgrad_cr_decompose(s, b, c, &d)) return Report(st);
  std::printf("CR(s=%s; b=%s, c=%s)\n", Num(s).c_str(), Num(b).c_str(),
              Num(c).c_str());
  std::printf("canonical decomposition (principal branch)\n");
  std::printf("  t1 = %s\n  t4 = %s\n  t7 = %s\n", Num(d.t1).c_str(),
              Num(d.t4).c_str(), Num(d.t7).c_str());
  std::printf("  dt1/ds = %s\n  dt4/ds = %s\n  dt7/ds = %s\n",
              Num(d.dt1_ds).c_str(), Num(d.dt4_ds).c_str(),
              Num(d.dt7_ds).c_str());
  std::printf("  reconstruction residual = %.3e\n", d.canonical_residual);
  std::printf("binary decomposition CR(s; b, 0) . X^(c s) on qubit 1\n");
  std::printf("  shift constant CR(s; b, 0) = %s\n", Num(d.shift_cr).c_str());
  std::printf("  shift constant X^(c s)     = %s\n",
              Num(d.shift_drive).c_str());
  std::printf("  reconstruction residual = %.3e\n", d.binary_residual);
  return kExitOk;
}

int CmdSweep(double b, double c, double s_min, double s_max, double s_step,
             const std::string& out) {
  double max_t7 = 0.0;
  if (auto st = qgrad_cr_sweep_csv(b, c, s_min, s_max, s_step, out.c_str(),
                                   &max_t7)) {
    return Report(st);
  }
  std::printf("wrote %s\nmax t7 = %s\n", out.c_str(), Num(max_t7).c_str());
  return kExitOk;
}

int CmdVerify(std::uint64_t seed, std::size_t trials) {
  char* report = nullptr;
  int passed = 0;
  if (auto st = qgrad_verify(seed, trials, &report, &passed)) return Report(st);
  std::fputs(report, stdout);
  qgrad_string_free(report);
  return passed ? kExitOk : kExitDiscrepancy;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qgrad: statevector simulator with parameter-shift, "
               "decomposition, and middle-out gradients"};
  app.require_subcommand(1);

  std::string file;
  std::string engine = "all";
  std::string s_text = "0", b_text = "1", c_text = "0";
  std::string s_min_text = "0", s_max_text = "2", s_step_text = "0.005";
  std::string out = "sweep.csv";
  std::uint64_t seed = 1;
  std::size_t trials = 50;

  auto* eval = app.add_subcommand("eval", "Print the expectation value");
  eval->add_option("file", file, "circuit JSON file")->required();

  auto* grad = app.add_subcommand("grad", "Print gradients per symbol");
  grad->add_option("file", file, "circuit JSON file")->required();
  grad->add_option("--engine", engine, "shift | middleout | backprop | fd | all")
      ->check(CLI::IsMember({"shift", "middleout", "backprop", "fd", "all"}));

  auto* dec = app.add_subcommand("decompose-cr",
                                 "Decompose CR(s; b, c) and check both circuits");
  dec->add_option("--s", s_text, "gate parameter s");
  dec->add_option("--b", b_text, "Z(x)X coefficient b");
  dec->add_option("--c", c_text, "I(x)X coefficient c");

  auto* sweep = app.add_subcommand("sweep", "Write t1/t4/t7 and derivatives vs s");
  sweep->add_option("--b", b_text, "Z(x)X coefficient b");
  sweep->add_option("--c", c_text, "I(x)X coefficient c");
  sweep->add_option("--s-min", s_min_text, "first s (default 0)");
  sweep->add_option("--s-max", s_max_text, "last s (default 2)");
  sweep->add_option("--s-step", s_step_text, "grid step (default 0.005)");
  sweep->add_option("--out", out, "CSV output path");

  auto* verify = app.add_subcommand("verify", "Run the randomized cross-engine suite");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--trials", trials, "trials per check");

  try {
    app.parse(argc, argv);
    if (*eval) return CmdEval(file);
    if (*grad) return CmdGrad(file, engine);
    if (*dec) {
      return CmdDecompose(Angle(s_text, "--s"), Angle(b_text, "--b"),
                          Angle(c_text, "--c"));
    }
    if (*sweep) {
      return CmdSweep(Angle(b_text, "--b"), Angle(c_text, "--c"),
                      Angle(s_min_text, "--s-min"), Angle(s_max_text, "--s-max"),
                      Angle(s_step_text, "--s-step"), out);
    }
    if (*verify) return CmdVerify(seed, trials);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }
  return kExitValidation;
}
