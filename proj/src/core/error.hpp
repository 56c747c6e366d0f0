// Copyright 2026 The supvkit Authors
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

#ifndef SUPVKIT_CORE_ERROR_HPP_
#define SUPVKIT_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace supvkit {

// Values mirror the SUPVKIT_E_* codes of the C API.
enum class ErrorCode {
  kParse = 2,
  kValidation = 3,
  kAlphabetMismatch = 4,
  kConflictingAttributes = 5,
  kNotSubbehavior = 6,
  kContainmentViolated = 7,
  kNonCongruenceCover = 8,
  kBudgetExceeded = 9,
  kInvalidArgument = 10,
  kIo = 11,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace supvkit

#endif  // SUPVKIT_CORE_ERROR_HPP_
