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

#include "slce/error.hpp"

namespace slce {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCompositeP: return "CompositeP";
    case ErrorCode::kSizeExceeded: return "SizeExceeded";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kLogOfZero: return "LogOfZero";
    case ErrorCode::kEvenK: return "EvenK";
    case ErrorCode::kKisOne: return "KisOne";
    case ErrorCode::kBadAlphabet: return "BadAlphabet";
    case ErrorCode::kNotBinary: return "NotBinary";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kConductorMismatch: return "ConductorMismatch";
    case ErrorCode::kNotSemiprimitive: return "NotSemiprimitive";
    case ErrorCode::kPreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::kHOutOfRange: return "HOutOfRange";
    case ErrorCode::kBadArgument: return "BadArgument";
  }
  return "Unknown";
}

}  // namespace slce
