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

#include "qgrad/gates.hpp"

#include <cmath>

#include "qgrad/error.hpp"

namespace qgrad {
namespace {

constexpr Complex kI{0.0, 1.0};

using GeneratorResult = std::optional<std::pair<Matrix, double>>;

Matrix Rotation(const Matrix& p, double theta) {
  return std::cos(theta / 2) * pauli::I() - kI * std::sin(theta / 2) * p;
}

// P^t = e^{i pi t/2} R_P(pi t), so that P^1 = P exactly.
Matrix PauliPower(const Matrix& p, double t) {
  return std::polar(1.0, kPi * t / 2) * Rotation(p, kPi * t);
}

Matrix TwoBody(char p) {
  const Matrix m = pauli::FromChar(p);
  return Kron(m, m);
}

// exp(-i (pi/2) t P(x)P); P(x)P squares to I.
Matrix TwoBodyPower(char p, double t) {
  return std::cos(kPi * t / 2) * Matrix::Identity(4, 4) -
         kI * std::sin(kPi * t / 2) * TwoBody(p);
}

Matrix CanonicalHamiltonian(double tx, double ty, double tz) {
  return tx * TwoBody('X') + ty * TwoBody('Y') + tz * TwoBody('Z');
}

auto Fixed(Matrix m) {
  return [m = std::move(m)](std::span<const double>) { return m; };
}

GeneratorResult NoGenerator(int, std::span<const double>) { return {}; }

auto SingleSlot(Matrix g, double a) {
  return [g = std::move(g), a](int slot,
                               std::span<const double>) -> GeneratorResult {
    if (slot != 0) return {};
    return std::make_pair(g, a);
  };
}

std::vector<GateDef> BuildRegistry() {
  std::vector<GateDef> gates;
  const struct {
    const char* rot;
    const char* pow;
    char label;
  } kAxes[] = {{"RX", "XPow", 'X'}, {"RY", "YPow", 'Y'}, {"RZ", "ZPow", 'Z'}};
  for (const auto& axis : kAxes) {
    const Matrix p = pauli::FromChar(axis.label);
    gates.push_back({axis.rot, 1, {"theta"},
                     [p](std::span<const double> v) { return Rotation(p, v[0]); },
                     SingleSlot(p, 0.5)});
  }
  for (const auto& axis : kAxes) {
    const Matrix p = pauli::FromChar(axis.label);
    gates.push_back({axis.pow, 1, {"t"},
                     [p](std::span<const double> v) {
                       return PauliPower(p, v[0]);
                     },
                     SingleSlot(p, kPi / 2)});
  }

  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  gates.push_back({"H", 1, {}, Fixed(h), NoGenerator});
  Matrix s(2, 2);
  s << 1, 0, 0, kI;
  gates.push_back({"S", 1, {}, Fixed(s), NoGenerator});
  gates.push_back({"X", 1, {}, Fixed(pauli::X()), NoGenerator});
  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
  gates.push_back({"CNOT", 2, {}, Fixed(cnot), NoGenerator});

  for (char label : {'X', 'Y', 'Z'}) {
    gates.push_back({std::string(2, label), 2, {"t"},
                     [label](std::span<const double> v) {
                       return TwoBodyPower(label, v[0]);
                     },
                     SingleSlot(TwoBody(label), kPi / 2)});
  }

  gates.push_back(
      {"CAN", 2, {"tx", "ty", "tz"},
       [](std::span<const double> v) {
         return HermitianExpm(CanonicalHamiltonian(v[0], v[1], v[2]),
                              kPi / 2);
       },
       [](int slot, std::span<const double>) -> GeneratorResult {
         if (slot < 0 || slot > 2) return {};
         return std::make_pair(TwoBody("XYZ"[slot]), kPi / 2);
       }});

  gates.push_back(
      {"CR", 2, {"s", "b", "c"},
       [](std::span<const double> v) {
         return HermitianExpm(CrHamiltonian(v[1], v[2]), kPi / 2 * v[0]);
       },
       [](int slot, std::span<const double> v) -> GeneratorResult {
         if (slot != 0) return {};
         if (v.size() != 3) {
           throw Error(ErrorCode::kArgument,
                       "CR generator needs the full (s, b, c) parameter list");
         }
         return std::make_pair(CrHamiltonian(v[1], v[2]), kPi / 2);
       }});

  Matrix magic(4, 4);
  magic << 1, 0, 0, kI,
           0, kI, 1, 0,
           0, kI, -1, 0,
           1, 0, 0, -kI;
  magic /= std::sqrt(2.0);
  gates.push_back({"MAGIC", 2, {}, Fixed(magic), NoGenerator});
  return gates;
}

const std::vector<GateDef>& Registry() {
  static const std::vector<GateDef> registry = BuildRegistry();
  return registry;
}

}  // namespace

Matrix CrHamiltonian(double b, double c) {
  return Kron(pauli::X(), pauli::I()) - b * Kron(pauli::Z(), pauli::X()) +
         c * Kron(pauli::I(), pauli::X());
}

GeneratorSpec AnalyzeGenerator(Matrix generator, double scale,
                               double cluster_tol) {
  if (!IsHermitian(generator, 1e-10)) {
    throw Error(ErrorCode::kValidation, "generator is not Hermitian");
  }
  GeneratorSpec spec;
  spec.eigenvalues =
      ClusterEigenvalues(HermitianEigenvalues(generator), cluster_tol);
  spec.generator = std::move(generator);
  spec.scale = scale;
  if (spec.eigenvalues.size() == 2) {
    const double e0 = spec.eigenvalues[0];
    const double e1 = spec.eigenvalues[1];
    spec.shift_constant = scale / 2 * (e1 - e0);
    spec.eigen_offset = (e1 + e0) / 2;
  }
  return spec;
}

std::span<const GateDef> AllGates() { return Registry(); }

const GateDef* FindGate(std::string_view name) {
  for (const GateDef& g : Registry()) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

const GateDef& LookupGate(std::string_view name) {
  const GateDef* def = FindGate(name);
  if (def == nullptr) {
    throw Error(ErrorCode::kArgument,
                "unknown gate '" + std::string(name) + "'");
  }
  return *def;
}

Matrix StandardGate(std::string_view name, std::span<const double> params) {
  const GateDef& def = LookupGate(name);
  if (params.size() != def.num_params()) {
    throw Error(ErrorCode::kArgument,
                def.name + " takes " + std::to_string(def.num_params()) +
                    " parameters, got " + std::to_string(params.size()));
  }
  return def.matrix(params);
}

GeneratorSpec GeneratorOf(std::string_view name, int param_index,
                          std::span<const double> params) {
  const GateDef& def = LookupGate(name);
  if (param_index < 0 ||
      static_cast<std::size_t>(param_index) >= def.num_params()) {
    throw Error(ErrorCode::kArgument,
                def.name + " has no parameter " + std::to_string(param_index));
  }
  auto gen = def.generator(param_index, params);
  if (!gen) {
    throw Error(ErrorCode::kUnsupportedGenerator,
                def.name + " is not of the form exp(-i a theta G) in '" +
                    def.parameter_names[param_index] + "'");
  }
  return AnalyzeGenerator(std::move(gen->first), gen->second);
}

Matrix EulerForm(const GeneratorSpec& spec, double theta) {
  if (!spec.shift_constant) {
    throw Error(ErrorCode::kUnsupportedGenerator,
                "Euler form requires exactly two generator eigenvalues");
  }
  const double r = *spec.shift_constant;
  const Eigen::Index dim = spec.generator.rows();
  const Matrix shifted =
      spec.generator - spec.eigen_offset * Matrix::Identity(dim, dim);
  return std::cos(r * theta) * Matrix::Identity(dim, dim) -
         kI * (spec.scale / r) * std::sin(r * theta) * shifted;
}

}  // namespace qgrad
