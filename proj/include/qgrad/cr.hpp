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

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "qgrad/circuit.hpp"
#include "qgrad/shift.hpp"

namespace qgrad {

// Cross-resonance gate exp(-i (pi/2) s (X(x)I - b Z(x)X + c I(x)X)).
// The closed-form decompositions assume b >= 0.
struct CrParams {
  double s = 0.0;
  double b = 1.0;
  double c = 0.0;
};

// Principal-branch parameters of the canonical decomposition,
// t1, t7 in [0, 1]. A derivative is empty where its closed form has a
// vanishing denominator (|denominator| < 1e-8); this happens exactly where
// t7 = 0 and both curves have a kink.
struct CrCanonicalParams {
  double t1 = 0.0;
  double t4 = 0.0;
  double t7 = 0.0;
  std::optional<double> dt1_ds;
  double dt4_ds = 0.0;
  std::optional<double> dt7_ds;
};

inline constexpr double kCrSingularTol = 1e-8;
inline constexpr double kArccosClampTol = 1e-9;

CrCanonicalParams CrCanonicalParameters(const CrParams& p);

// Angles actually placed in the canonical circuit. These carry the sign of
// sin(pi K s / 2), K = sqrt(1 + b^2), so that the circuit reproduces the CR
// gate beyond the first half period (X^t ~ X^(2-t), XX^t ~ XX^-t locally);
// they and their derivatives are finite everywhere.
struct CrCircuitAngles {
  double t1 = 0.0;
  double t4 = 0.0;
  double t7 = 0.0;
  double dt1_ds = 0.0;
  double dt4_ds = 0.0;
  double dt7_ds = 0.0;
};

CrCircuitAngles CrCircuitAnglesOf(const CrParams& p);

// On qubits (0, 1): X^t1 Y^(3/2) X on 0 and X^t4 on 1, then XX^t7, then
// Y^(3/2) X X^t1 on 0. Symbols "t1", "t4", "t7"; t1 is bound twice.
Circuit CrCanonicalCircuit(const CrParams& p, int num_qubits = 2);

// s -> (t1, t4, t7) over CrCanonicalCircuit's symbols at fixed b, c.
ParamMap CrCanonicalMap(double b, double c);

// df/ds through the canonical circuit: 8 shift evaluations when c != 0.
double CrChainGradient(const CrParams& p, const StateVector& initial,
                       const Observable& observable, Cost* cost = nullptr);

// CR(s; b, 0) on (0, 1) followed by X^u, u = c s, on qubit 1. Symbols "s"
// and, when c != 0, "u".
Circuit CrBinaryCircuit(const CrParams& p, int num_qubits = 2);

struct CrBinaryShiftConstants {
  double cr = 0.0;     // (pi/2) sqrt(b^2 + 1)
  double drive = 0.0;  // (pi/2) c, with respect to s
};

CrBinaryShiftConstants CrBinaryShifts(const CrParams& p);

// df/ds via the binary decomposition: 4 evaluations, or 2 when c = 0.
double CrBinaryGradient(const CrParams& p, const StateVector& initial,
                        const Observable& observable, Cost* cost = nullptr);

// t in [0, 1] with U ~ k1 CAN(t, 0, 0) k2 for local k1, k2, from the
// magic-basis trace (1/4) Tr[(M^dag U M)^T (M^dag U M)] after rescaling U to
// unit determinant.
double XXCoordinateFromUnitary(const Matrix& u);

struct CrSweepRow {
  double s = 0.0;
  CrCanonicalParams params;
};

std::vector<CrSweepRow> CrSweep(double b, double c,
                                std::span<const double> s_grid);

// s_min, s_min + step, ... up to and including s_max (within 1e-9 steps).
std::vector<double> SweepGrid(double s_min, double s_max, double step);

// Header s,t1,t4,t7,dt1_ds,dt4_ds,dt7_ds; empty derivatives as SINGULAR.
void WriteSweepCsv(std::ostream& out, std::span<const CrSweepRow> rows);

}  // namespace qgrad
