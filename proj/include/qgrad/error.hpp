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

#include <stdexcept>
#include <string>

namespace qgrad {

enum class ErrorCode {
  kArgument,
  kCapacity,
  kValidation,
  kUnsupportedGenerator,
  kNotShiftDifferentiable,
  kSingularity,
  kDomain,
  kNotXXClass,
  kOracle,
  kParse,
  kIo,
};

const char* ErrorCodeName(ErrorCode code);

// Single exception type for the library; the code distinguishes the failure
// class so the C API can map it onto a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by chain-rule evaluation when the inner Jacobian is not finite.
class SingularityError : public Error {
 public:
  SingularityError(double theta, const std::string& what)
      : Error(ErrorCode::kSingularity, what), theta_(theta) {}

  double theta() const noexcept { return theta_; }

 private:
  double theta_;
};

}  // namespace qgrad
