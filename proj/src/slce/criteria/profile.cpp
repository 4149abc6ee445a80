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

#include "slce/criteria/profile.hpp"

#include <numeric>
#include <vector>

#include "slce/arith.hpp"
#include "slce/criteria/checks.hpp"
#include "slce/ff/residue_field.hpp"

namespace slce::criteria {

MultiplicityProfile ComputeMultiplicityProfile(const seq::SlceSequence& s) {
  const std::vector<uint8_t> bits = s.Bits();
  MultiplicityProfile profile;
  profile.T = s.period();
  profile.u = s.u();
  const uint64_t cap = uint64_t{1} << s.u();
  uint64_t root_total = 0;
  for (uint64_t k : Divisors(s.t_prime())) {
    const ff::ResidueField rf = ff::ResidueField::ForOrder(k);
    std::vector<uint8_t> seen(k, 0);
    for (uint64_t e = 0; e < k; ++e) {
      if (std::gcd(e, k) != 1 || seen[e]) continue;
      const uint64_t mult = CappedMultiplicity(bits, s.u(), rf.GammaPower(e), rf);
      for (uint64_t c = e; !seen[c]; c = 2 * c % k) {
        seen[c] = 1;
        profile.multiplicity[{k, c}] = mult;
        root_total += std::min(mult, cap);
      }
    }
  }
  profile.L = profile.T - root_total;
  return profile;
}

}  // namespace slce::criteria
