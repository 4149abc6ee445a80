// Copyright 2026 The SLCE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SLCE_ERROR_HPP_
#define SLCE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace slce {

enum class ErrorCode {
  kCompositeP = 1,
  kSizeExceeded,
  kDivisionByZero,
  kLogOfZero,
  kEvenK,
  kKisOne,
  kBadAlphabet,
  kNotBinary,
  kBothZero,
  kZeroPolynomial,
  kConductorMismatch,
  kNotSemiprimitive,
  kPreconditionUnmet,
  kHOutOfRange,
  kBadArgument,
};

const char* ErrorCodeName(ErrorCode code);

// Every precondition failure in the library surfaces as an Error carrying
// one of the codes above; the C API maps them one-to-one onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace slce

#endif  // SLCE_ERROR_HPP_
