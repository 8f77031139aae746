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


#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qgrad/error.hpp"
#include "qgrad/gates.hpp"
#include "qgrad/oracle.hpp"
#include "test_util.hpp"

namespace qgrad {
namespace {

using testing::CodeOf;

Matrix Swap() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

TEST(StandardGate, RxZeroIsIdentity) {
  EXPECT_LT(MaxAbs(StandardGate("RX", {0.0}) - Matrix::Identity(2, 2)),
            1e-15);
}

TEST(StandardGate, AllUnitary) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3, 3);
  for (const GateDef& g : AllGates()) {
    std::vector<double> p(g.num_params());
    for (double& v : p) v = u(rng);
    const Matrix m = StandardGate(g.name, p);
    EXPECT_EQ(m.rows(), 1 << g.arity) << g.name;
    EXPECT_TRUE(IsUnitary(m)) << g.name;
  }
}

TEST(StandardGate, CanonicalHalfIsSwap) {
  const Matrix can = StandardGate("CAN", {0.5, 0.5, 0.5});
  EXPECT_TRUE(oracle::EqualUpToPhase(can, Swap(), 1e-12));
}

TEST(StandardGate, CanonicalMatchesDenseExponential) {
  const double tx = 0.31, ty = -0.2, tz = 0.77;
  const Matrix h = tx * Kron(pauli::X(), pauli::X()) +
                   ty * Kron(pauli::Y(), pauli::Y()) +
                   tz * Kron(pauli::Z(), pauli::Z());
  EXPECT_LT(MaxAbs(StandardGate("CAN", {tx, ty, tz}) -
                   oracle::DenseExpm(h, kPi / 2)),
            1e-12);
}

TEST(StandardGate, PauliPowerAtOneIsPauli) {
  EXPECT_LT(MaxAbs(StandardGate("XPow", {1.0}) - pauli::X()), 1e-15);
  EXPECT_LT(MaxAbs(StandardGate("YPow", {1.0}) - pauli::Y()), 1e-15);
  EXPECT_LT(MaxAbs(StandardGate("ZPow", {1.0}) - pauli::Z()), 1e-15);
}

TEST(StandardGate, CrMatchesDenseExponential) {
  const double s = 0.7, b = 1.3, c = -0.4;
  EXPECT_LT(MaxAbs(StandardGate("CR", {s, b, c}) -
                   oracle::DenseExpm(CrHamiltonian(b, c), kPi / 2 * s)),
            1e-12);
}

TEST(StandardGate, CrEigenvalues) {
  for (auto [b, c] : {std::pair{1.0, 0.5}, {0.3, -1.7}, {2.0, 0.25}}) {
    std::vector<double> ev = HermitianEigenvalues(CrHamiltonian(b, c));
    const double k = std::sqrt(b * b + 1);
    std::vector<double> want = {-c - k, c - k, -c + k, c + k};
    std::sort(want.begin(), want.end());
    ASSERT_EQ(ev.size(), 4u);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], want[i], 1e-12);
  }
}

TEST(StandardGate, Errors) {
  EXPECT_EQ(CodeOf([] { StandardGate("NOPE", {}); }), ErrorCode::kArgument);
  EXPECT_EQ(CodeOf([] { StandardGate("RX", {}); }), ErrorCode::kArgument);
  EXPECT_EQ(CodeOf([] { StandardGate("H", {1.0}); }), ErrorCode::kArgument);
}

TEST(GeneratorOf, ShiftConstants) {
  EXPECT_NEAR(*GeneratorOf("RX", 0).shift_constant, 0.5, 1e-14);
  EXPECT_NEAR(*GeneratorOf("XX", 0).shift_constant, kPi / 2, 1e-14);
  EXPECT_NEAR(*GeneratorOf("CR", 0, {0.3, 1.0, 0.0}).shift_constant,
              kPi / 2 * std::sqrt(2.0), 1e-12);
  for (int slot = 0; slot < 3; ++slot) {
    EXPECT_NEAR(*GeneratorOf("CAN", slot).shift_constant, kPi / 2, 1e-14);
  }
}

TEST(GeneratorOf, CrWithDriveHasFourEigenvalues) {
  const GeneratorSpec spec = GeneratorOf("CR", 0, {0.3, 1.0, 0.5});
  EXPECT_FALSE(spec.shift_differentiable());
  EXPECT_EQ(spec.eigenvalues.size(), 4u);
}

TEST(GeneratorOf, Errors) {
  EXPECT_EQ(CodeOf([] { GeneratorOf("H", 0); }), ErrorCode::kArgument);
  EXPECT_EQ(CodeOf([] { GeneratorOf("RX", 1); }), ErrorCode::kArgument);
  EXPECT_EQ(CodeOf([] { GeneratorOf("CR", 1, {0.3, 1.0, 0.0}); }),
            ErrorCode::kUnsupportedGenerator);
}

TEST(EulerForm, RxHalfPeriod) {
  const Matrix u = EulerForm(GeneratorOf("RX", 0), kPi);
  const Matrix want = Complex(0, -1) * pauli::X();
  EXPECT_LT(MaxAbs(u - want), 1e-15);
  EXPECT_LT(MaxAbs(u - StandardGate("RX", {kPi})), 1e-15);
}

TEST(EulerForm, ShiftPoints) {
  const GeneratorSpec spec = GeneratorOf("XX", 0);
  const double r = *spec.shift_constant;
  const Matrix g =
      spec.generator - spec.eigen_offset * Matrix::Identity(4, 4);
  for (double sign : {1.0, -1.0}) {
    const Matrix u = EulerForm(spec, sign * kPi / (4 * r));
    const Matrix want = (Matrix::Identity(4, 4) -
                         sign * Complex(0, 1) * (spec.scale / r) * g) /
                        std::sqrt(2.0);
    EXPECT_LT(MaxAbs(u - want), 1e-14);
  }
}

TEST(EulerForm, OffsetSpectrum) {
  Matrix g = Matrix::Zero(2, 2);
  g(1, 1) = 2;
  const GeneratorSpec spec = AnalyzeGenerator(g, 1.0);
  ASSERT_TRUE(spec.shift_differentiable());
  EXPECT_NEAR(*spec.shift_constant, 1.0, 1e-14);
  for (double theta : {-2.1, 0.0, 0.4, 1.9}) {
    EXPECT_TRUE(oracle::EqualUpToPhase(EulerForm(spec, theta),
                                       oracle::DenseExpm(g, theta), 1e-12));
  }
}

TEST(EulerForm, RequiresTwoEigenvalues) {
  const GeneratorSpec spec = GeneratorOf("CR", 0, {0.3, 1.0, 0.5});
  EXPECT_EQ(CodeOf([&] { EulerForm(spec, 0.1); }),
            ErrorCode::kUnsupportedGenerator);
}

// Every single-parameter gate against exp(-i a theta G).
TEST(Properties, PhaseEquivalenceSingleParameter) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2 * kPi, 2 * kPi);
  int checked = 0;
  for (const GateDef& g : AllGates()) {
    if (g.num_params() != 1) continue;
    const GeneratorSpec spec = GeneratorOf(g.name, 0);
    ++checked;
    for (int k = 0; k < 100; ++k) {
      const double theta = u(rng);
      const Matrix dense = oracle::DenseExpm(spec.generator,
                                             spec.scale * theta);
      EXPECT_LT(oracle::PhaseResidual(EulerForm(spec, theta), dense), 1e-10)
          << g.name << " theta " << theta;
      EXPECT_LT(oracle::PhaseResidual(StandardGate(g.name, {theta}), dense),
                1e-10)
          << g.name << " theta " << theta;
    }
  }
  EXPECT_EQ(checked, 9);
}

TEST(Properties, CanonicalFactorsCommute) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const double t[3] = {u(rng), u(rng), u(rng)};
    const Matrix f[3] = {StandardGate("XX", {t[0]}), StandardGate("YY", {t[1]}),
                         StandardGate("ZZ", {t[2]})};
    const Matrix can = StandardGate("CAN", {t[0], t[1], t[2]});
    int order[3] = {0, 1, 2};
    int orders = 0;
    do {
      const Matrix prod = f[order[0]] * f[order[1]] * f[order[2]];
      EXPECT_TRUE(oracle::EqualUpToPhase(prod, can, 1e-12));
      ++orders;
    } while (std::next_permutation(order, order + 3));
    EXPECT_EQ(orders, 6);
  }
}

TEST(Properties, PauliPowerIsRotation) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 50; ++k) {
    const double t = u(rng);
    EXPECT_TRUE(oracle::EqualUpToPhase(StandardGate("XPow", {t}),
                                       StandardGate("RX", {kPi * t}), 1e-12));
    EXPECT_TRUE(oracle::EqualUpToPhase(StandardGate("YPow", {t}),
                                       StandardGate("RY", {kPi * t}), 1e-12));
    EXPECT_TRUE(oracle::EqualUpToPhase(StandardGate("ZPow", {t}),
                                       StandardGate("RZ", {kPi * t}), 1e-12));
  }
}

// G = e0 P + e1 (I - P) for a random rank-k projector P.
TEST(Properties, TwoProjectorClustering) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = trial % 2 == 0 ? 2 : 4;
    const int rank = 1 + trial % (dim - 1);
    const Matrix v = testing::RandomUnitary(rng, dim);
    const Matrix cols = v.leftCols(rank);
    const Matrix p = cols * cols.adjoint();
    double e0 = u(rng), e1 = u(rng);
    if (std::abs(e1 - e0) < 0.1) e1 = e0 + 0.5;
    const Matrix g =
        e0 * p + e1 * (Matrix::Identity(dim, dim) - p);
    const double a = 0.5 + trial * 0.01;
    const GeneratorSpec spec = AnalyzeGenerator(g, a);
    ASSERT_EQ(spec.eigenvalues.size(), 2u);
    EXPECT_NEAR(*spec.shift_constant, a / 2 * std::abs(e1 - e0), 1e-10);
  }
}

TEST(AnalyzeGenerator, RejectsNonHermitian) {
  Matrix g(2, 2);
  g << 0, 1, 0, 0;
  EXPECT_EQ(CodeOf([&] { AnalyzeGenerator(g, 1.0); }),
            ErrorCode::kValidation);
}

}  // namespace
}  // namespace qgrad
