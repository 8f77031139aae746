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

/* C interface to the qgrad simulator and gradient engines.
 *
 * Every function returns a qgrad_status. On failure the message is
 * available from qgrad_last_error() until the next call on the same thread.
 * Strings returned through char** are owned by the caller and released with
 * qgrad_string_free().
 */
#ifndef QGRAD_QGRAD_H_
#define QGRAD_QGRAD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QGRAD_API __declspec(dllexport)
#else
#define QGRAD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qgrad_status {
  QGRAD_OK = 0,
  QGRAD_ERR_ARGUMENT = 1,
  QGRAD_ERR_CAPACITY = 2,
  QGRAD_ERR_VALIDATION = 3,
  QGRAD_ERR_UNSUPPORTED_GENERATOR = 4,
  QGRAD_ERR_NOT_SHIFT_DIFFERENTIABLE = 5,
  QGRAD_ERR_SINGULARITY = 6,
  QGRAD_ERR_DOMAIN = 7,
  QGRAD_ERR_NOT_XX_CLASS = 8,
  QGRAD_ERR_ORACLE = 9,
  QGRAD_ERR_PARSE = 10,
  QGRAD_ERR_IO = 11,
  QGRAD_ERR_BUFFER_TOO_SMALL = 12,
  QGRAD_ERR_INTERNAL = 13
} qgrad_status;

typedef enum qgrad_engine {
  QGRAD_ENGINE_SHIFT = 0,
  QGRAD_ENGINE_MIDDLEOUT = 1,
  QGRAD_ENGINE_BACKPROP = 2,
  QGRAD_ENGINE_FD = 3
} qgrad_engine;

/* Circuit plus observable loaded from the JSON circuit format. */
typedef struct qgrad_problem qgrad_problem;

typedef struct qgrad_cost {
  size_t expectation_evaluations;
  size_t gate_applications;
  size_t generator_applications; /* adjoint engines only */
  size_t inner_products;         /* adjoint engines only */
  size_t live_states;            /* adjoint engines only */
  size_t num_gates;
} qgrad_cost;

typedef struct qgrad_cr_decomposition {
  double t1, t4, t7;      /* principal branch, t1 and t7 in [0, 1] */
  double dt1_ds, dt4_ds, dt7_ds;
  int dt1_singular;       /* nonzero: dt1_ds is NaN */
  int dt7_singular;       /* nonzero: dt7_ds is NaN */
  double shift_cr;        /* (pi/2) sqrt(b^2 + 1) */
  double shift_drive;     /* (pi/2) c */
  double canonical_residual;
  double binary_residual;
} qgrad_cr_decomposition;

QGRAD_API const char* qgrad_last_error(void);
QGRAD_API const char* qgrad_status_name(qgrad_status status);
QGRAD_API void qgrad_string_free(char* s);

QGRAD_API qgrad_status qgrad_problem_load(const char* path,
                                          qgrad_problem** out);
QGRAD_API qgrad_status qgrad_problem_parse(const char* json,
                                           qgrad_problem** out);
QGRAD_API void qgrad_problem_free(qgrad_problem* problem);
QGRAD_API qgrad_status qgrad_problem_to_json(const qgrad_problem* problem,
                                             char** out);

QGRAD_API qgrad_status qgrad_problem_num_symbols(const qgrad_problem* problem,
                                                 size_t* out);
/* Borrowed pointer, valid for the problem's lifetime. */
QGRAD_API qgrad_status qgrad_problem_symbol_name(const qgrad_problem* problem,
                                                 size_t index,
                                                 const char** out);
QGRAD_API qgrad_status qgrad_problem_set_symbol(qgrad_problem* problem,
                                                size_t index, double value);

/* Expectation from |0...0> at the current symbol values. */
QGRAD_API qgrad_status qgrad_evaluate(const qgrad_problem* problem,
                                      double* out);

/* One gradient per symbol into out[0 .. len); len must be at least the
   symbol count. `cost` may be NULL. */
QGRAD_API qgrad_status qgrad_gradients(const qgrad_problem* problem,
                                       qgrad_engine engine, double* out,
                                       size_t len, qgrad_cost* cost);

QGRAD_API qgrad_status qgrad_cr_decompose(double s, double b, double c,
                                          qgrad_cr_decomposition* out);

/* XX coordinate of a 4x4 unitary given as 16 row-major (re, im) pairs. */
QGRAD_API qgrad_status qgrad_xx_coordinate(const double* re_im,
                                           double* out);

/* Writes the sweep CSV to `path` and reports the largest t7 on the grid. */
QGRAD_API qgrad_status qgrad_cr_sweep_csv(double b, double c, double s_min,
                                          double s_max, double s_step,
                                          const char* path, double* max_t7);

/* Runs the randomized cross-engine suite; *passed is 1 when every check
   passed. `report` receives a human-readable summary. */
QGRAD_API qgrad_status qgrad_verify(uint64_t seed, size_t trials,
                                    char** report, int* passed);

/* Reals and fractions of pi, e.g. "pi/2", "-3pi/4", "0.25". */
QGRAD_API qgrad_status qgrad_parse_angle(const char* text, double* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* QGRAD_QGRAD_H_ */
