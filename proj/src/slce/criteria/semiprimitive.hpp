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

#ifndef SLCE_CRITERIA_SEMIPRIMITIVE_HPP_
#define SLCE_CRITERIA_SEMIPRIMITIVE_HPP_

#include <cstdint>
#include <vector>

#include "slce/ff/ext_field.hpp"
#include "slce/seq/slce_sequence.hpp"

namespace slce::criteria {

// v: minimal with 2^h k | p^v + 1, w = m / 2v;
// vprime: minimal with k | p^v' + 1, wprime = m / 2v'.
struct SemiprimitiveParams {
  uint64_t v = 0;
  uint64_t w = 0;
  uint64_t vprime = 0;
  uint64_t wprime = 0;
};

// Throws NotSemiprimitive when no such v exists or 2v does not divide m.
SemiprimitiveParams ComputeSemiprimitiveParams(uint32_t p, uint32_t m,
                                               uint64_t k, unsigned h);

// K(eta_{i/2^h} chi) = G(rho) for every i < 2^h and every chi of order k.
bool UniformKCheck(uint32_t p, uint32_t m, uint64_t k, unsigned h,
                 uint64_t cap = ff::kDefaultFieldCap);

// Parity rule for (1 + X + ... + X^(k-1))^(2^h) | S(X):
// p = 1 mod 4: w' even; p = 3 mod 4: w' even or v'w' odd.
bool SemiprimitivePredict(uint32_t p, uint32_t m, uint64_t k, unsigned h);

// Polynomial-division oracle for the same divisibility.
bool RepunitPowerDivides(const seq::SlceSequence& s, uint64_t k, unsigned h);

// Every beta of order k has multiplicity 0 or at least 2^h (capped at 2^u).
bool MultiplicityGapHolds(const seq::SlceSequence& s, uint64_t k, unsigned h);

struct SemiprimitiveCase {
  uint32_t p = 0;
  uint32_t m = 0;
  uint64_t k = 0;
  unsigned h = 0;
};

// All (p, m, k, h) with q = p^m <= q_max, odd k > 1 dividing q - 1, h >= 1,
// satisfying the semiprimitive hypotheses; sorted by (q, k, h).
std::vector<SemiprimitiveCase> EnumerateSemiprimitiveCases(uint64_t q_max);

}  // namespace slce::criteria

#endif  // SLCE_CRITERIA_SEMIPRIMITIVE_HPP_
