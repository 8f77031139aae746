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

#include "qgrad/cr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>

#include "qgrad/error.hpp"

namespace qgrad {
namespace {

void CheckFinite(const CrParams& p) {
  if (!std::isfinite(p.s) || !std::isfinite(p.b) || !std::isfinite(p.c)) {
    throw Error(ErrorCode::kDomain, "CR parameters must be finite");
  }
}

void CheckArccosArgument(double x, const char* which) {
  if (!(std::abs(x) <= 1 + kArccosClampTol)) {
    throw Error(ErrorCode::kDomain,
                std::string("arccos argument of ") + which +
                    " outside [-1, 1]: " + std::to_string(x));
  }
}

// Shared trigonometric pieces of the closed forms.
struct CrTrig {
  double k = 1.0;     // sqrt(1 + b^2)
  double sin_h = 0.0;  // sin(pi k s / 2)
  double cos_h = 1.0;  // cos(pi k s / 2)
  double cos_t7 = 1.0;  // cos(pi t7 / 2) = sqrt(1 - b^2 sin_h^2 / k^2)
};

CrTrig Trig(const CrParams& p) {
  CheckFinite(p);
  CrTrig t;
  t.k = std::sqrt(1 + p.b * p.b);
  const double half = kPi * t.k * p.s / 2;
  t.sin_h = std::sin(half);
  t.cos_h = std::cos(half);
  const double ratio = p.b * t.sin_h / t.k;
  t.cos_t7 = std::sqrt(std::max(0.0, 1 - ratio * ratio));

  // Arguments of the two arccos forms, as written.
  const double b2 = p.b * p.b;
  const double x7 = (1 + b2 * std::cos(2 * half)) / (1 + b2);
  CheckArccosArgument(x7, "t7");
  CheckArccosArgument(t.cos_h / t.cos_t7, "t1");
  return t;
}

double Sign(double x) { return x < 0 ? -1.0 : 1.0; }

}  // namespace

// t7 = (1/pi) arccos((1 + b^2 cos(pi k s)) / (1 + b^2)) and
// t1 = (1/pi) arccos(cos(pi k s / 2) / cos(pi t7 / 2)) are evaluated in the
// equivalent forms (2/pi) asin(b |sin_h| / k) and atan2(|sin_h| / k, cos_h) /
// pi, which keep full precision near t7 = 0.
CrCanonicalParams CrCanonicalParameters(const CrParams& p) {
  const CrTrig t = Trig(p);
  const double abs_sin = std::abs(t.sin_h);
  CrCanonicalParams out;
  out.t7 = 2 / kPi * std::asin(std::min(1.0, p.b * abs_sin / t.k));
  out.t1 = std::atan2(abs_sin / t.k, t.cos_h) / kPi;
  out.t4 = p.c * p.s;
  out.dt4_ds = p.c;

  const double sigma = Sign(t.sin_h);
  // sqrt(1 - x7^2) = 2 (b |sin_h| / k) cos_t7
  const double dt7_den = 2 * p.b * abs_sin / t.k * t.cos_t7;
  if (dt7_den >= kCrSingularTol) {
    out.dt7_ds = sigma * p.b * t.cos_h / t.cos_t7;
  }
  // sqrt(1 - (cos_h / cos_t7)^2) = |sin_h| / (k cos_t7)
  const double dt1_den = abs_sin / (t.k * t.cos_t7);
  if (dt1_den >= kCrSingularTol) {
    out.dt1_ds =
        sigma / (2 * (t.cos_h * t.cos_h + t.sin_h * t.sin_h / (t.k * t.k)));
  }
  return out;
}

CrCircuitAngles CrCircuitAnglesOf(const CrParams& p) {
  const CrTrig t = Trig(p);
  CrCircuitAngles a;
  // Lift atan2 onto the branch continuous in s; it stays within pi/2 of the
  // half angle. Whole turns leave the gate unchanged since P^(t+2) = P^t.
  const double half = kPi * t.k * p.s / 2;
  double phase = std::atan2(t.sin_h / t.k, t.cos_h);
  phase += 2 * kPi * std::round((half - phase) / (2 * kPi));
  a.t1 = phase / kPi;
  a.t7 = 2 / kPi * std::asin(std::clamp(p.b * t.sin_h / t.k, -1.0, 1.0));
  a.t4 = p.c * p.s;
  a.dt1_ds =
      1 / (2 * (t.cos_h * t.cos_h + t.sin_h * t.sin_h / (t.k * t.k)));
  a.dt7_ds = p.b * t.cos_h / t.cos_t7;
  a.dt4_ds = p.c;
  return a;
}

Circuit CrCanonicalCircuit(const CrParams& p, int num_qubits) {
  const CrCircuitAngles a = CrCircuitAnglesOf(p);
  Circuit c(num_qubits);
  const SymbolRef t1{c.AddSymbol("t1", a.t1)};
  const SymbolRef t4{c.AddSymbol("t4", a.t4)};
  const SymbolRef t7{c.AddSymbol("t7", a.t7)};
  c.Add("XPow", {0}, {t1});
  c.Add("XPow", {1}, {t4});
  c.Add("YPow", {0}, {1.5});
  c.Add("X", {0});
  c.Add("XX", {0, 1}, {t7});
  c.Add("YPow", {0}, {1.5});
  c.Add("X", {0});
  c.Add("XPow", {0}, {t1});
  return c;
}

ParamMap CrCanonicalMap(double b, double c) {
  return ParamMap{
      [b, c](double s) {
        const CrCircuitAngles a = CrCircuitAnglesOf({s, b, c});
        return std::vector<double>{a.t1, a.t4, a.t7};
      },
      [b, c](double s) {
        const CrCircuitAngles a = CrCircuitAnglesOf({s, b, c});
        return std::vector<double>{a.dt1_ds, a.dt4_ds, a.dt7_ds};
      }};
}

double CrChainGradient(const CrParams& p, const StateVector& initial,
                       const Observable& observable, Cost* cost) {
  const Circuit circuit = CrCanonicalCircuit(p, initial.num_qubits());
  return ChainRuleGradient(circuit, CrCanonicalMap(p.b, p.c), p.s, initial,
                           observable, cost);
}

Circuit CrBinaryCircuit(const CrParams& p, int num_qubits) {
  CheckFinite(p);
  Circuit c(num_qubits);
  const SymbolRef s{c.AddSymbol("s", p.s)};
  c.Add("CR", {0, 1}, {s, p.b, 0.0});
  if (p.c != 0.0) {
    const SymbolRef u{c.AddSymbol("u", p.c * p.s)};
    c.Add("XPow", {1}, {u});
  }
  return c;
}

CrBinaryShiftConstants CrBinaryShifts(const CrParams& p) {
  const GeneratorSpec cr = GeneratorOf("CR", 0, {p.s, p.b, 0.0});
  const GeneratorSpec drive = GeneratorOf("XPow", 0, {p.c * p.s});
  return {cr.shift_constant.value_or(0.0),
          p.c * drive.shift_constant.value_or(0.0)};
}

double CrBinaryGradient(const CrParams& p, const StateVector& initial,
                        const Observable& observable, Cost* cost) {
  const Circuit circuit = CrBinaryCircuit(p, initial.num_qubits());
  ParamMap map;
  if (p.c != 0.0) {
    const double c = p.c;
    map.values = [c](double s) { return std::vector<double>{s, c * s}; };
    map.derivatives = [c](double) { return std::vector<double>{1.0, c}; };
  } else {
    map.values = [](double s) { return std::vector<double>{s}; };
    map.derivatives = [](double) { return std::vector<double>{1.0}; };
  }
  return ChainRuleGradient(circuit, map, p.s, initial, observable, cost);
}

double XXCoordinateFromUnitary(const Matrix& u) {
  if (u.rows() != 4 || u.cols() != 4 || !IsUnitary(u, 1e-10)) {
    throw Error(ErrorCode::kArgument, "expected a 4x4 unitary");
  }
  const Matrix magic = StandardGate("MAGIC", {});
  const Complex root = std::pow(u.determinant(), -0.25);
  static const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Matrix best_m;
  Complex best;
  for (const Complex& unit : kIPow) {
    const Matrix v = magic.adjoint() * (root * unit * u) * magic;
    const Matrix m = v.transpose() * v;
    const Complex trace = m.trace() / 4.0;
    if (best_m.size() == 0 ||
        std::abs(trace.imag()) < std::abs(best.imag()) - 1e-12) {
      best = trace;
      best_m = m;
    }
  }
  // XX class: the spectrum of m is exp(+-i pi t), each twice.
  const Eigen::ComplexEigenSolver<Matrix> solver(best_m, false);
  const auto& ev = solver.eigenvalues();
  double sin_sum = 0.0;
  bool xx_class =
      std::abs(best.imag()) <= 1e-6 && std::abs(best.real()) <= 1 + 1e-6;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    sin_sum += std::abs(ev[i].imag());
    xx_class = xx_class && std::abs(ev[i].real() - best.real()) <= 1e-6;
  }
  if (!xx_class) {
    throw Error(ErrorCode::kNotXXClass,
                "unitary is not locally equivalent to an XX-class gate");
  }
  // atan2 keeps full precision near t = 0 and t = 1, where acos does not.
  return std::atan2(sin_sum / 4, best.real()) / kPi;
}

std::vector<CrSweepRow> CrSweep(double b, double c,
                                std::span<const double> s_grid) {
  std::vector<CrSweepRow> rows;
  rows.reserve(s_grid.size());
  for (double s : s_grid) {
    if (!std::isfinite(s)) {
      throw Error(ErrorCode::kArgument, "sweep grid must be finite");
    }
    rows.push_back({s, CrCanonicalParameters({s, b, c})});
  }
  return rows;
}

std::vector<double> SweepGrid(double s_min, double s_max, double step) {
  if (!std::isfinite(s_min) || !std::isfinite(s_max) || !(step > 0) ||
      s_max < s_min) {
    throw Error(ErrorCode::kArgument,
                "sweep range needs finite s_min <= s_max and step > 0");
  }
  const double span = (s_max - s_min) / step;
  if (span > 1e7) {
    throw Error(ErrorCode::kCapacity, "sweep grid too large");
  }
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = s_min + static_cast<double>(i) * step;
  }
  return grid;
}

void WriteSweepCsv(std::ostream& out, std::span<const CrSweepRow> rows) {
  out << "s,t1,t4,t7,dt1_ds,dt4_ds,dt7_ds\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::string(buf);
  };
  auto opt = [&](const std::optional<double>& v) {
    return v ? num(*v) : std::string("SINGULAR");
  };
  for (const CrSweepRow& r : rows) {
    const CrCanonicalParams& p = r.params;
    out << num(r.s) << ',' << num(p.t1) << ',' << num(p.t4) << ','
        << num(p.t7) << ',' << opt(p.dt1_ds) << ',' << num(p.dt4_ds) << ','
        << opt(p.dt7_ds) << '\n';
  }
}

}  // namespace qgrad
