// Copyright 2026 The hcover Authors
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

#ifndef HCOVER_ERROR_HPP_
#define HCOVER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcover {

enum class ErrorCode {
  kEmptyInput,
  kGenericityFailure,
  kHalfplaneContainsCenter,
  kSubsetViolation,
  kCapExceeded,
  kBudgetExceeded,
  kInvalidInput,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kGenericityFailure: return "GenericityFailure";
    case ErrorCode::kHalfplaneContainsCenter: return "HalfplaneContainsCenter";
    case ErrorCode::kSubsetViolation: return "SubsetViolation";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hcover

#endif  // HCOVER_ERROR_HPP_
