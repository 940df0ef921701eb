// Copyright 2026 The mcflow Authors.
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

#ifndef MCFLOW_COMMON_ERROR_H_
#define MCFLOW_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace mcflow {

enum class ErrorCode {
  kParse,
  kNoFlowPossible,
  kContract,
  kUnsupported,
  kIo,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

// Every failure in the core surfaces as an Error; the C API maps the code
// onto mcf_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void Require(bool condition, const std::string& message) {
  if (!condition) Fail(ErrorCode::kContract, message);
}

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kNoFlowPossible:
      return "no flow possible";
    case ErrorCode::kContract:
      return "contract violation";
    case ErrorCode::kUnsupported:
      return "unsupported";
    case ErrorCode::kIo:
      return "i/o error";
    case ErrorCode::kInternal:
      return "internal error";
  }
  return "unknown";
}

}  // namespace mcflow

#endif  // MCFLOW_COMMON_ERROR_H_
