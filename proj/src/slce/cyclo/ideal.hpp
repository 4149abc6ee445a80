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

#ifndef SLCE_CYCLO_IDEAL_HPP_
#define SLCE_CYCLO_IDEAL_HPP_

#include <cstdint>

#include "slce/cyclo/cyc_int.hpp"
#include "slce/ff/residue_field.hpp"
#include "slce/polybin/binary_poly.hpp"

namespace slce::cyclo {

// The ideal 2^two_power * P * Z[zeta_{2^h k}], where P = (2, fcan(zeta_k)).
class IdealSpec {
 public:
  IdealSpec(uint64_t k, polybin::BinaryPoly fcan, unsigned h, unsigned two_power);
  static IdealSpec For(const ff::ResidueField& rf, unsigned h, unsigned two_power) {
    return IdealSpec(rf.k(), rf.modulus(), h, two_power);
  }

  uint64_t k() const { return k_; }
  const polybin::BinaryPoly& fcan() const { return fcan_; }
  unsigned h() const { return h_; }
  unsigned two_power() const { return two_power_; }
  // Normalized conductor of the working ring.
  uint64_t working_conductor() const { return conductor_; }
  // Generator of the image of P in Z[zeta_N]/2 = F_2[X]/(Phi_N mod 2):
  // gcd(fcan(X)^(N/k), Phi_N mod 2).
  const polybin::BinaryPoly& residue_generator() const { return generator_; }

 private:
  uint64_t k_;
  polybin::BinaryPoly fcan_;
  unsigned h_;
  unsigned two_power_;
  uint64_t conductor_;
  polybin::BinaryPoly generator_;
};

// Image of x under Z[zeta_k] -> F_2[X]/(fcan), zeta_k -> gamma.
// Throws ConductorMismatch unless x has conductor rf.k().
polybin::BinaryPoly ReduceModP(const CycInt& x, const ff::ResidueField& rf);

// x in 2^e P O_L: every coefficient divisible by 2^e, and the residue of
// x / 2^e mod 2 lies in the image of P. Throws ConductorMismatch unless x
// lives in the working ring.
bool IdealMembership(const CycInt& x, const IdealSpec& spec);

}  // namespace slce::cyclo

#endif  // SLCE_CYCLO_IDEAL_HPP_
