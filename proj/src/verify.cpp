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

#include "qgrad/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "qgrad/cr.hpp"
#include "qgrad/error.hpp"
#include "qgrad/middleout.hpp"
#include "qgrad/oracle.hpp"
#include "qgrad/shift.hpp"

namespace qgrad {
namespace {

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Tolerance for comparisons against the central-difference oracle.
double FdTolerance(double g) { return std::max(1e-7, 1e-6 * std::abs(g)); }

class CheckRecorder {
 public:
  explicit CheckRecorder(std::string name) { check_.name = std::move(name); }

  // Records one trial; `ratio` is error / tolerance.
  void Trial(double ratio, const std::function<std::string()>& describe) {
    ++check_.trials;
    check_.max_error = std::max(check_.max_error, ratio);
    if (!(ratio <= 1.0)) {
      if (check_.failures++ == 0) check_.first_failure = describe();
    }
  }

  void Fail(const std::string& why) {
    ++check_.trials;
    if (check_.failures++ == 0) check_.first_failure = why;
  }

  VerifyCheck Take() { return std::move(check_); }

 private:
  VerifyCheck check_;
};

std::string Describe(std::uint64_t trial, const char* what, double a,
                     double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "trial %llu: %s %.12g vs %.12g",
                static_cast<unsigned long long>(trial), what, a, b);
  return buf;
}

CrParams RandomCr(std::mt19937_64& rng) {
  return {Uniform(rng, 0.0, 2.0), Uniform(rng, 0.25, 2.0),
          Uniform(rng, -2.0, 2.0)};
}

}  // namespace

Circuit RandomCircuit(std::mt19937_64& rng, const RandomCircuitOptions& opts) {
  const int n = UniformInt(rng, opts.min_qubits, opts.max_qubits);
  const int depth = UniformInt(rng, 1, opts.max_depth);
  Circuit c(n);
  const int num_symbols = UniformInt(rng, 1, depth);
  for (int i = 0; i < num_symbols; ++i) {
    c.AddSymbol("p" + std::to_string(i), Uniform(rng, -kPi, kPi));
  }
  std::vector<std::string> pool = {"RX", "RY", "RZ", "XPow", "YPow", "ZPow"};
  if (opts.include_fixed) {
    pool.insert(pool.end(), {"H", "S", "X"});
  }
  if (n >= 2) {
    pool.insert(pool.end(), {"XX", "YY", "ZZ", "CAN"});
    if (opts.include_fixed) pool.push_back("CNOT");
    if (opts.include_cr) pool.insert(pool.end(), {"CR", "CR"});
  }
  auto param = [&]() -> ParamRef {
    if (Uniform(rng, 0, 1) < 0.8) {
      return SymbolRef{static_cast<std::size_t>(
          UniformInt(rng, 0, num_symbols - 1))};
    }
    return Uniform(rng, -kPi, kPi);
  };
  for (int g = 0; g < depth; ++g) {
    const std::string& name =
        pool[UniformInt(rng, 0, static_cast<int>(pool.size()) - 1)];
    const GateDef& def = LookupGate(name);
    std::vector<int> targets{UniformInt(rng, 0, n - 1)};
    if (def.arity == 2) {
      int other = UniformInt(rng, 0, n - 2);
      if (other >= targets[0]) ++other;
      targets.push_back(other);
    }
    std::vector<ParamRef> params;
    if (name == "CR") {
      double c_coef = Uniform(rng, 0.25, 2.0);
      if (Uniform(rng, 0, 1) < 0.5) c_coef = -c_coef;
      params = {param(), Uniform(rng, 0.25, 2.0), c_coef};
    } else {
      for (std::size_t k = 0; k < def.num_params(); ++k) {
        params.push_back(param());
      }
    }
    c.Add(name, std::move(targets), std::move(params));
  }
  return c;
}

Observable RandomPauliObservable(std::mt19937_64& rng, int num_qubits) {
  static const char kLabels[] = {'I', 'X', 'Y', 'Z'};
  const int terms = UniformInt(rng, 1, 3);
  std::vector<PauliTerm> out;
  for (int t = 0; t < terms; ++t) {
    std::string s;
    for (int q = 0; q < num_qubits; ++q) s += kLabels[UniformInt(rng, 0, 3)];
    out.push_back({s, Uniform(rng, -1.0, 1.0)});
  }
  return Observable::FromPauliTerms(num_qubits, std::move(out));
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.failures == 0; });
}

std::string VerifyReport::Format() const {
  std::ostringstream out;
  char buf[200];
  std::snprintf(buf, sizeof buf, "seed %llu\n",
                static_cast<unsigned long long>(seed));
  out << buf;
  for (const VerifyCheck& c : checks) {
    std::snprintf(buf, sizeof buf, "%-4s %-31s trials=%zu failures=%zu "
                  "worst=%.3g x tol\n",
                  c.failures == 0 ? "PASS" : "FAIL", c.name.c_str(), c.trials,
                  c.failures, c.max_error);
    out << buf;
    if (!c.first_failure.empty()) out << "     first failure: " << c.first_failure << "\n";
  }
  out << (passed() ? "all checks passed\n" : "some checks FAILED\n");
  return out.str();
}

VerifyReport RunVerification(std::uint64_t seed, std::size_t trials) {
  VerifyReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);

  CheckRecorder shift_fd("shift-vs-finite-difference");
  CheckRecorder shift_mo("shift-vs-middleout");
  CheckRecorder mo_fd("middleout-vs-finite-difference");
  CheckRecorder mo_bp("middleout-vs-backprop");
  CheckRecorder counters("middleout-counters");
  CheckRecorder recon("cr-reconstruction");
  CheckRecorder cr_grad("cr-gradient-concordance");

  for (std::size_t t = 0; t < trials; ++t) {
    try {
      RandomCircuitOptions shift_opts;
      shift_opts.max_depth = 8;
      const Circuit c = RandomCircuit(rng, shift_opts);
      const Observable obs = RandomPauliObservable(rng, c.num_qubits());
      const StateVector psi = NewZeroState(c.num_qubits());
      const GradientReport shift = AllShiftGradients(c, psi, obs);
      const GradientReport fd = oracle::FiniteDifferenceGradients(c, psi, obs);
      const GradientReport mo = MiddleOutGradients(c, psi, obs);
      double worst_fd = 0.0, worst_mo = 0.0;
      std::size_t wi = 0, wj = 0;
      for (std::size_t i = 0; i < shift.gradients.size(); ++i) {
        const double r = std::abs(shift.gradients[i] - fd.gradients[i]) /
                         FdTolerance(fd.gradients[i]);
        if (r > worst_fd) { worst_fd = r; wi = i; }
        const double m = std::abs(shift.gradients[i] - mo.gradients[i]) / 1e-9;
        if (m > worst_mo) { worst_mo = m; wj = i; }
      }
      shift_fd.Trial(worst_fd, [&] {
        return Describe(t, "shift vs fd", shift.gradients[wi], fd.gradients[wi]);
      });
      shift_mo.Trial(worst_mo, [&] {
        return Describe(t, "shift vs middleout", shift.gradients[wj],
                        mo.gradients[wj]);
      });
    } catch (const Error& e) {
      shift_fd.Fail("trial " + std::to_string(t) + ": " + e.what());
    }

    try {
      RandomCircuitOptions mixed;
      mixed.max_depth = 12;
      mixed.include_cr = true;
      const Circuit c = RandomCircuit(rng, mixed);
      const Observable obs = RandomPauliObservable(rng, c.num_qubits());
      const StateVector psi = NewZeroState(c.num_qubits());
      const GradientReport mo = MiddleOutGradients(c, psi, obs);
      const GradientReport bp = BackpropReferenceGradients(c, psi, obs);
      const GradientReport fd = oracle::FiniteDifferenceGradients(c, psi, obs);
      double worst_fd = 0.0, worst_bp = 0.0;
      for (std::size_t i = 0; i < mo.gradients.size(); ++i) {
        worst_fd = std::max(worst_fd, std::abs(mo.gradients[i] - fd.gradients[i]) /
                                          FdTolerance(fd.gradients[i]));
        worst_bp = std::max(worst_bp,
                            std::abs(mo.gradients[i] - bp.gradients[i]) / 1e-10);
      }
      mo_fd.Trial(worst_fd, [&] { return "trial " + std::to_string(t); });
      mo_bp.Trial(worst_bp, [&] { return "trial " + std::to_string(t); });

      const MiddleOutCounters& k = *mo.counters;
      const std::size_t n = c.size();
      const std::size_t bound = c.NumOccurrences();
      const bool ok = k.gate_applications <= 4 * n &&
                      k.generator_applications == bound &&
                      k.inner_products == bound && k.live_states <= 3;
      counters.Trial(ok ? 0.0 : 2.0, [&] {
        return "trial " + std::to_string(t) + ": gates=" +
               std::to_string(k.gate_applications) + " N=" +
               std::to_string(n) + " live=" + std::to_string(k.live_states);
      });
    } catch (const Error& e) {
      mo_fd.Fail("trial " + std::to_string(t) + ": " + e.what());
    }

    try {
      const CrParams p = RandomCr(rng);
      const Matrix direct = StandardGate("CR", {p.s, p.b, p.c});
      const double r1 = oracle::PhaseResidual(
          oracle::DenseCircuitUnitary(CrCanonicalCircuit(p)), direct);
      const double r2 = oracle::PhaseResidual(
          oracle::DenseCircuitUnitary(CrBinaryCircuit(p)), direct);
      recon.Trial(std::max(r1, r2) / 1e-9, [&] {
        return Describe(t, "canonical/binary residuals", r1, r2);
      });

      const Observable obs = RandomPauliObservable(rng, 2);
      const StateVector psi = NewZeroState(2);
      Circuit single(2);
      single.AddSymbol("s", p.s);
      single.Add("CR", {0, 1}, {single.Sym("s"), p.b, p.c});
      const double fd = oracle::FiniteDifference(
          [&](double s) {
            Circuit w = single;
            w.SetSymbol(0, s);
            return Evaluate(w, psi, obs);
          },
          p.s);
      Cost chain_cost, binary_cost;
      const double chain = CrChainGradient(p, psi, obs, &chain_cost);
      const double binary = CrBinaryGradient(p, psi, obs, &binary_cost);
      const double mo = MiddleOutGradients(single, psi, obs).gradients[0];
      const double vals[] = {chain, binary, mo, fd};
      double spread = 0.0;
      for (double a : vals) {
        for (double b : vals) spread = std::max(spread, std::abs(a - b));
      }
      const bool counts_ok = chain_cost.expectation_evaluations == 8 &&
                             binary_cost.expectation_evaluations == 4;
      cr_grad.Trial(counts_ok ? spread / 1e-6 : 2.0, [&] {
        return Describe(t, "chain vs fd", chain, fd) + " binary " +
               std::to_string(binary) + " evals " +
               std::to_string(chain_cost.expectation_evaluations) + "/" +
               std::to_string(binary_cost.expectation_evaluations);
      });
    } catch (const Error& e) {
      recon.Fail("trial " + std::to_string(t) + ": " + e.what());
    }
  }

  for (CheckRecorder* r :
       {&shift_fd, &shift_mo, &mo_fd, &mo_bp, &counters, &recon, &cr_grad}) {
    report.checks.push_back(r->Take());
  }
  return report;
}

}  // namespace qgrad
