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

#ifndef SLCE_POLYBIN_LINEAR_COMPLEXITY_HPP_
#define SLCE_POLYBIN_LINEAR_COMPLEXITY_HPP_

#include <cstdint>
#include <span>

#include "slce/polybin/binary_poly.hpp"

namespace slce::polybin {

enum class LcMethod { kBerlekampMassey, kGcdFormula };

struct LinearComplexityResult {
  uint64_t L = 0;
  // Connection polynomial 1 + c_1 X + ... + c_L X^L.
  BinaryPoly minimal_poly;
  LcMethod method = LcMethod::kBerlekampMassey;
};

// Shortest LFSR generating the finite sequence `bits` (entries 0/1).
LinearComplexityResult BerlekampMasseyFinite(std::span<const uint8_t> bits);

// Linear complexity of the periodic sequence with one period `period`.
// Runs the synthesis over two periods, which pins the periodic LFSR.
LinearComplexityResult BerlekampMassey(std::span<const uint8_t> period);

// L = T - deg gcd(X^T - 1, S) and c(X) = (X^T - 1) / gcd(X^T - 1, S).
LinearComplexityResult LinearComplexityViaGcd(const BinaryPoly& S, uint64_t T);

}  // namespace slce::polybin

#endif  // SLCE_POLYBIN_LINEAR_COMPLEXITY_HPP_
