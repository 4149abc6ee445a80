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

#ifndef SLCE_FF_RESIDUE_FIELD_HPP_
#define SLCE_FF_RESIDUE_FIELD_HPP_

#include <cstdint>

#include "slce/polybin/binary_poly.hpp"

namespace slce::ff {

using polybin::BinaryPoly;

// F_{2^f} = F_2[X]/(fcan(X)) where fcan is the smallest irreducible factor
// of Phi_k mod 2 and f = ord_k(2). The class gamma of X has order exactly k
// and plays the role of zeta_k under Z[zeta_k] -> Z[zeta_k]/P, so the
// choice of fcan fixes the prime P = (2, fcan(zeta_k)).
//
// Elements are BinaryPoly values of degree < f.
class ResidueField {
 public:
  // Throws EvenK / KisOne.
  static ResidueField Build(uint64_t k);
  // Also admits k = 1 (F_2 with gamma = 1).
  static ResidueField ForOrder(uint64_t k);
  // Uses another irreducible factor of Phi_k mod 2 as the modulus.
  static ResidueField WithModulus(uint64_t k, BinaryPoly modulus);

  uint64_t k() const { return k_; }
  uint64_t f() const { return f_; }
  const BinaryPoly& modulus() const { return modulus_; }
  const BinaryPoly& gamma() const { return gamma_; }

  BinaryPoly Reduce(const BinaryPoly& a) const { return a % modulus_; }
  BinaryPoly Mul(const BinaryPoly& a, const BinaryPoly& b) const;
  BinaryPoly Pow(const BinaryPoly& a, uint64_t n) const;
  BinaryPoly GammaPower(uint64_t e) const { return Pow(gamma_, e % k_); }
  // poly(x) by Horner's rule.
  BinaryPoly Evaluate(const BinaryPoly& poly, const BinaryPoly& x) const;

 private:
  ResidueField(uint64_t k, uint64_t f, BinaryPoly modulus);

  uint64_t k_;
  uint64_t f_;
  BinaryPoly modulus_;
  BinaryPoly gamma_;
};

}  // namespace slce::ff

#endif  // SLCE_FF_RESIDUE_FIELD_HPP_
