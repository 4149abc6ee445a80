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

#include "slce/cyclo/character.hpp"

#include <numeric>
#include <vector>

#include "slce/arith.hpp"
#include "slce/error.hpp"

namespace slce::cyclo {

Character::Character(std::shared_ptr<const ff::ExtField> field, uint64_t index)
    : field_(std::move(field)) {
  const uint64_t T = field_->group_order();
  index_ = index % T;
  const uint64_t g = std::gcd(index_, T);  // gcd(0, T) = T
  order_ = T / g;
  reduced_index_ = index_ / g;
}

Character Character::Trivial(std::shared_ptr<const ff::ExtField> field) {
  return Character(std::move(field), 0);
}

Character Character::Quadratic(std::shared_ptr<const ff::ExtField> field) {
  const uint64_t T = field->group_order();
  return Character(std::move(field), T / 2);
}

Character Character::Eta(std::shared_ptr<const ff::ExtField> field,
                         uint64_t num, uint64_t den) {
  const uint64_t T = field->group_order();
  if (den == 0 || T % den != 0) {
    Fail(ErrorCode::kBadArgument, "character denominator must divide q - 1");
  }
  return Character(std::move(field), num % den * (T / den));
}

uint64_t Character::ExponentAtPower(uint64_t n) const {
  return MulMod(reduced_index_, n % order_, order_);
}

std::optional<uint64_t> Character::Exponent(ff::FieldElement x) const {
  if (x.code == 0) return std::nullopt;
  return ExponentAtPower(field_->Dlog(x));
}

CycInt Character::Value(ff::FieldElement x) const {
  const std::optional<uint64_t> e = Exponent(x);
  if (!e) return CycInt(order_);
  return CycInt::ZetaPower(order_, static_cast<int64_t>(*e));
}

Character Character::operator*(const Character& other) const {
  if (field_ != other.field_ && field_->q() != other.field_->q()) {
    Fail(ErrorCode::kBadArgument, "characters of different fields");
  }
  return Character(field_, (index_ + other.index_) % field_->group_order());
}

Character Character::Conj() const {
  const uint64_t T = field_->group_order();
  return Character(field_, (T - index_) % T);
}

CycInt JacobiSum(const Character& chi1, const Character& chi2) {
  const auto& field = chi1.field();
  const uint64_t N = std::lcm(chi1.order(), chi2.order());
  const uint64_t step1 = N / chi1.order();
  const uint64_t step2 = N / chi2.order();
  std::vector<int64_t> counts(N, 0);
  // x = alpha^n ranges over F_q minus {0, 1}; both terms vanish elsewhere.
  for (uint64_t n = 1; n < field->group_order(); ++n) {
    const int64_t log_one_minus = field->LogOneMinusPower(n);
    const uint64_t e = chi1.ExponentAtPower(n) * step1 +
                       chi2.ExponentAtPower(static_cast<uint64_t>(log_one_minus)) * step2;
    ++counts[e % N];
  }
  return CycInt::FromExponentCounts(N, counts);
}

CycInt KSum(const Character& chi) {
  return JacobiSum(Character::Quadratic(chi.field()), chi);
}

}  // namespace slce::cyclo
