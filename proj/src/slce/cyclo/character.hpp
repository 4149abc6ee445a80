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

#ifndef SLCE_CYCLO_CHARACTER_HPP_
#define SLCE_CYCLO_CHARACTER_HPP_

#include <cstdint>
#include <memory>
#include <optional>

#include "slce/cyclo/cyc_int.hpp"
#include "slce/ff/ext_field.hpp"

namespace slce::cyclo {

// Multiplicative character eta_{a/(q-1)} of F_q: alpha -> zeta_{q-1}^a,
// extended by chi(0) = 0.
class Character {
 public:
  Character(std::shared_ptr<const ff::ExtField> field, uint64_t index);

  static Character Trivial(std::shared_ptr<const ff::ExtField> field);
  // rho = eta_{1/2}.
  static Character Quadratic(std::shared_ptr<const ff::ExtField> field);
  // eta_{num/den}; requires den | q - 1.
  static Character Eta(std::shared_ptr<const ff::ExtField> field, uint64_t num,
                       uint64_t den);

  const std::shared_ptr<const ff::ExtField>& field() const { return field_; }
  uint64_t index() const { return index_; }
  uint64_t order() const { return order_; }
  bool IsTrivial() const { return index_ == 0; }

  // e with chi(alpha^n) = zeta_order^e.
  uint64_t ExponentAtPower(uint64_t n) const;
  // Same for an arbitrary element; nullopt at 0.
  std::optional<uint64_t> Exponent(ff::FieldElement x) const;
  // chi(x) in conductor order(); chi(0) = 0.
  CycInt Value(ff::FieldElement x) const;

  Character operator*(const Character& other) const;
  Character Conj() const;

 private:
  std::shared_ptr<const ff::ExtField> field_;
  uint64_t index_;
  uint64_t order_;
  uint64_t reduced_index_;  // index / gcd(index, q - 1)
};

// J(chi1, chi2) = sum_x chi1(x) chi2(1 - x), exact, in conductor
// lcm(order chi1, order chi2) (normalized).
CycInt JacobiSum(const Character& chi1, const Character& chi2);

// K(chi) = J(rho, chi).
CycInt KSum(const Character& chi);

}  // namespace slce::cyclo

#endif  // SLCE_CYCLO_CHARACTER_HPP_
