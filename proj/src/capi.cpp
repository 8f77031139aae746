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

#include "qgrad/qgrad.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <string>

#include "qgrad/circuit_file.hpp"
#include "qgrad/cr.hpp"
#include "qgrad/error.hpp"
#include "qgrad/middleout.hpp"
#include "qgrad/oracle.hpp"
#include "qgrad/shift.hpp"
#include "qgrad/verify.hpp"

struct qgrad_problem {
  qgrad::CircuitFile file;
};

namespace {

thread_local std::string g_last_error;

qgrad_status ToStatus(qgrad::ErrorCode code) {
  using qgrad::ErrorCode;
  switch (code) {
    case ErrorCode::kArgument: return QGRAD_ERR_ARGUMENT;
    case ErrorCode::kCapacity: return QGRAD_ERR_CAPACITY;
    case ErrorCode::kValidation: return QGRAD_ERR_VALIDATION;
    case ErrorCode::kUnsupportedGenerator: return QGRAD_ERR_UNSUPPORTED_GENERATOR;
    case ErrorCode::kNotShiftDifferentiable: return QGRAD_ERR_NOT_SHIFT_DIFFERENTIABLE;
    case ErrorCode::kSingularity: return QGRAD_ERR_SINGULARITY;
    case ErrorCode::kDomain: return QGRAD_ERR_DOMAIN;
    case ErrorCode::kNotXXClass: return QGRAD_ERR_NOT_XX_CLASS;
    case ErrorCode::kOracle: return QGRAD_ERR_ORACLE;
    case ErrorCode::kParse: return QGRAD_ERR_PARSE;
    case ErrorCode::kIo: return QGRAD_ERR_IO;
  }
  return QGRAD_ERR_INTERNAL;
}

qgrad_status Fail(qgrad_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
qgrad_status Guard(F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const qgrad::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(QGRAD_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return Fail(QGRAD_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define QGRAD_REQUIRE(cond, msg) \
  if (!(cond)) return Fail(QGRAD_ERR_ARGUMENT, msg)

}  // namespace

extern "C" {

const char* qgrad_last_error(void) { return g_last_error.c_str(); }

const char* qgrad_status_name(qgrad_status status) {
  switch (status) {
    case QGRAD_OK: return "ok";
    case QGRAD_ERR_ARGUMENT: return "argument error";
    case QGRAD_ERR_CAPACITY: return "capacity error";
    case QGRAD_ERR_VALIDATION: return "validation error";
    case QGRAD_ERR_UNSUPPORTED_GENERATOR: return "unsupported generator";
    case QGRAD_ERR_NOT_SHIFT_DIFFERENTIABLE: return "not shift-differentiable";
    case QGRAD_ERR_SINGULARITY: return "singularity";
    case QGRAD_ERR_DOMAIN: return "domain error";
    case QGRAD_ERR_NOT_XX_CLASS: return "not XX-class";
    case QGRAD_ERR_ORACLE: return "oracle error";
    case QGRAD_ERR_PARSE: return "parse error";
    case QGRAD_ERR_IO: return "I/O error";
    case QGRAD_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case QGRAD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void qgrad_string_free(char* s) { std::free(s); }

qgrad_status qgrad_problem_load(const char* path, qgrad_problem** out) {
  QGRAD_REQUIRE(path && out, "null argument");
  return Guard([&] {
    *out = new qgrad_problem{qgrad::LoadCircuitFile(path)};
    return QGRAD_OK;
  });
}

qgrad_status qgrad_problem_parse(const char* json, qgrad_problem** out) {
  QGRAD_REQUIRE(json && out, "null argument");
  return Guard([&] {
    *out = new qgrad_problem{qgrad::ParseCircuitJson(json)};
    return QGRAD_OK;
  });
}

void qgrad_problem_free(qgrad_problem* problem) { delete problem; }

qgrad_status qgrad_problem_to_json(const qgrad_problem* problem, char** out) {
  QGRAD_REQUIRE(problem && out, "null argument");
  return Guard([&] {
    *out = CopyString(qgrad::WriteCircuitJson(problem->file));
    return QGRAD_OK;
  });
}

qgrad_status qgrad_problem_num_symbols(const qgrad_problem* problem,
                                       size_t* out) {
  QGRAD_REQUIRE(problem && out, "null argument");
  *out = problem->file.circuit.num_symbols();
  return QGRAD_OK;
}

qgrad_status qgrad_problem_symbol_name(const qgrad_problem* problem,
                                       size_t index, const char** out) {
  QGRAD_REQUIRE(problem && out, "null argument");
  QGRAD_REQUIRE(index < problem->file.circuit.num_symbols(),
                "symbol index out of range");
  *out = problem->file.circuit.symbol_name(index).c_str();
  return QGRAD_OK;
}

qgrad_status qgrad_problem_set_symbol(qgrad_problem* problem, size_t index,
                                      double value) {
  QGRAD_REQUIRE(problem, "null argument");
  QGRAD_REQUIRE(index < problem->file.circuit.num_symbols(),
                "symbol index out of range");
  QGRAD_REQUIRE(std::isfinite(value), "symbol value must be finite");
  problem->file.circuit.SetSymbol(index, value);
  return QGRAD_OK;
}

qgrad_status qgrad_evaluate(const qgrad_problem* problem, double* out) {
  QGRAD_REQUIRE(problem && out, "null argument");
  return Guard([&] {
    const auto& f = problem->file;
    *out = qgrad::Evaluate(f.circuit, qgrad::NewZeroState(f.circuit.num_qubits()),
                           f.observable);
    return QGRAD_OK;
  });
}

qgrad_status qgrad_gradients(const qgrad_problem* problem, qgrad_engine engine,
                             double* out, size_t len, qgrad_cost* cost) {
  QGRAD_REQUIRE(problem, "null argument");
  const auto& f = problem->file;
  if (len < f.circuit.num_symbols() || (len > 0 && out == nullptr)) {
    return Fail(QGRAD_ERR_BUFFER_TOO_SMALL,
                "gradient buffer smaller than the symbol count");
  }
  return Guard([&] {
    const qgrad::StateVector psi = qgrad::NewZeroState(f.circuit.num_qubits());
    qgrad::GradientReport report;
    switch (engine) {
      case QGRAD_ENGINE_SHIFT:
        report = qgrad::AllShiftGradients(f.circuit, psi, f.observable);
        break;
      case QGRAD_ENGINE_MIDDLEOUT:
        report = qgrad::MiddleOutGradients(f.circuit, psi, f.observable);
        break;
      case QGRAD_ENGINE_BACKPROP:
        report = qgrad::BackpropReferenceGradients(f.circuit, psi, f.observable);
        break;
      case QGRAD_ENGINE_FD:
        report = qgrad::oracle::FiniteDifferenceGradients(f.circuit, psi,
                                                          f.observable);
        break;
      default:
        return Fail(QGRAD_ERR_ARGUMENT, "unknown engine");
    }
    std::copy(report.gradients.begin(), report.gradients.end(), out);
    if (cost) {
      *cost = qgrad_cost{};
      cost->expectation_evaluations = report.expectation_evaluations;
      cost->gate_applications = report.gate_applications;
      cost->num_gates = f.circuit.size();
      if (report.counters) {
        cost->generator_applications = report.counters->generator_applications;
        cost->inner_products = report.counters->inner_products;
        cost->live_states = report.counters->live_states;
      }
    }
    return QGRAD_OK;
  });
}

qgrad_status qgrad_cr_decompose(double s, double b, double c,
                                qgrad_cr_decomposition* out) {
  QGRAD_REQUIRE(out, "null argument");
  return Guard([&] {
    const qgrad::CrParams p{s, b, c};
    const qgrad::CrCanonicalParams cp = qgrad::CrCanonicalParameters(p);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    qgrad_cr_decomposition d{};
    d.t1 = cp.t1;
    d.t4 = cp.t4;
    d.t7 = cp.t7;
    d.dt1_ds = cp.dt1_ds.value_or(nan);
    d.dt4_ds = cp.dt4_ds;
    d.dt7_ds = cp.dt7_ds.value_or(nan);
    d.dt1_singular = !cp.dt1_ds.has_value();
    d.dt7_singular = !cp.dt7_ds.has_value();
    const qgrad::CrBinaryShiftConstants shifts = qgrad::CrBinaryShifts(p);
    d.shift_cr = shifts.cr;
    d.shift_drive = shifts.drive;
    const qgrad::Matrix direct = qgrad::StandardGate("CR", {s, b, c});
    d.canonical_residual = qgrad::oracle::PhaseResidual(
        qgrad::oracle::DenseCircuitUnitary(qgrad::CrCanonicalCircuit(p)),
        direct);
    d.binary_residual = qgrad::oracle::PhaseResidual(
        qgrad::oracle::DenseCircuitUnitary(qgrad::CrBinaryCircuit(p)), direct);
    *out = d;
    return QGRAD_OK;
  });
}

qgrad_status qgrad_xx_coordinate(const double* re_im, double* out) {
  QGRAD_REQUIRE(re_im && out, "null argument");
  return Guard([&] {
    qgrad::Matrix u(4, 4);
    for (int i = 0; i < 16; ++i) {
      u(i / 4, i % 4) = qgrad::Complex(re_im[2 * i], re_im[2 * i + 1]);
    }
    *out = qgrad::XXCoordinateFromUnitary(u);
    return QGRAD_OK;
  });
}

qgrad_status qgrad_cr_sweep_csv(double b, double c, double s_min,
                                double s_max, double s_step, const char* path,
                                double* max_t7) {
  QGRAD_REQUIRE(path, "null argument");
  return Guard([&] {
    const std::vector<double> grid = qgrad::SweepGrid(s_min, s_max, s_step);
    const std::vector<qgrad::CrSweepRow> rows = qgrad::CrSweep(b, c, grid);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      return Fail(QGRAD_ERR_IO, std::string("cannot write '") + path + "'");
    }
    qgrad::WriteSweepCsv(file, rows);
    file.close();
    if (!file) {
      return Fail(QGRAD_ERR_IO, std::string("error writing '") + path + "'");
    }
    if (max_t7) {
      double best = 0.0;
      for (const auto& r : rows) best = std::max(best, r.params.t7);
      *max_t7 = best;
    }
    return QGRAD_OK;
  });
}

qgrad_status qgrad_verify(uint64_t seed, size_t trials, char** report,
                          int* passed) {
  QGRAD_REQUIRE(passed, "null argument");
  return Guard([&] {
    const qgrad::VerifyReport r = qgrad::RunVerification(seed, trials);
    *passed = r.passed() ? 1 : 0;
    if (report) *report = CopyString(r.Format());
    return QGRAD_OK;
  });
}

qgrad_status qgrad_parse_angle(const char* text, double* out) {
  QGRAD_REQUIRE(text && out, "null argument");
  return Guard([&] {
    *out = qgrad::ParseAngle(text);
    return QGRAD_OK;
  });
}

}  // extern "C"
