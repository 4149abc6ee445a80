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

#ifndef SLCE_CRITERIA_PROFILE_HPP_
#define SLCE_CRITERIA_PROFILE_HPP_

#include <cstdint>
#include <map>
#include <utility>

#include "slce/seq/slce_sequence.hpp"

namespace slce::criteria {

// Multiplicity of every root beta = gamma_k^e of X^T' - 1 in S(X), capped at
// 2^u, together with the linear complexity it implies,
// L = T - sum min(mult, 2^u).
struct MultiplicityProfile {
  uint64_t T = 0;
  uint64_t u = 0;
  // (k, e) -> multiplicity; k runs over the divisors of T' (k = 1 is beta = 1).
  std::map<std::pair<uint64_t, uint64_t>, uint64_t> multiplicity;
  uint64_t L = 0;
};

// Conjugates beta, beta^2, ... share a multiplicity (S has F_2 coefficients),
// so one evaluation per cyclotomic coset of 2 mod k is enough.
MultiplicityProfile ComputeMultiplicityProfile(const seq::SlceSequence& s);

}  // namespace slce::criteria

#endif  // SLCE_CRITERIA_PROFILE_HPP_
