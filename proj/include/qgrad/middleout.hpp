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

#include <cstddef>

#include "qgrad/circuit.hpp"
#include "qgrad/report.hpp"

namespace qgrad {

// All symbol gradients from one forward sweep, one observable application,
// and a lockstep recursion of the forward state |F_k> and the
// observable-propagated state |B_k>:
//
//   df/dtheta_k = 2 a_k Im <B_k| G_k |F_k>
//
// Any Hermitian generator is accepted; tied symbols sum their per-gate
// contributions. The initial state is not modified.
GradientReport MiddleOutGradients(const Circuit& circuit,
                                  const StateVector& initial,
                                  const Observable& observable);

// Default cap on stored amplitudes for the reference engine (512 MiB).
inline constexpr std::size_t kDefaultBackpropAmplitudeCap = std::size_t{1}
                                                            << 25;

// Reference adjoint that stores every intermediate forward state. Same
// gradients as MiddleOutGradients; memory grows as N * 2^M.
GradientReport BackpropReferenceGradients(
    const Circuit& circuit, const StateVector& initial,
    const Observable& observable,
    std::size_t amplitude_cap = kDefaultBackpropAmplitudeCap);

}  // namespace qgrad
