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

#include "slce/criteria/context.hpp"

#include <numeric>

#include "slce/cyclo/ideal.hpp"
#include "slce/error.hpp"

namespace slce::criteria {

AnalysisContext::AnalysisContext(std::shared_ptr<const seq::SlceSequence> seq,
                                 std::shared_ptr<const ff::ResidueField> rf,
                                 uint64_t e, cyclo::Character chi)
    : seq_(std::move(seq)),
      rf_(std::move(rf)),
      e_(e),
      chi_(std::move(chi)),
      k_cache_(std::make_shared<KCache>()) {
  const BinaryPoly beta = rf_->GammaPower(e_);
  beta_powers_.reserve(rf_->k());
  BinaryPoly power = BinaryPoly::One();
  for (uint64_t r = 0; r < rf_->k(); ++r) {
    beta_powers_.push_back(power);
    power = rf_->Mul(power, beta);
  }
}

AnalysisContext AnalysisContext::Make(std::shared_ptr<const seq::SlceSequence> seq,
                                      std::shared_ptr<const ff::ResidueField> rf,
                                      uint64_t e) {
  if (!seq->field() || seq->d() != 2) {
    Fail(ErrorCode::kNotBinary, "analysis needs a generated binary sequence");
  }
  const uint64_t k = rf->k();
  if (k <= 1 || seq->t_prime() % k != 0) {
    Fail(ErrorCode::kBadArgument, "k must be an odd divisor of T exceeding 1");
  }
  if (std::gcd(e, k) != 1) Fail(ErrorCode::kBadArgument, "e must be a unit mod k");
  cyclo::Character chi = cyclo::Character::Eta(seq->field(), e % k, k);
  AnalysisContext ctx(std::move(seq), std::move(rf), e % k, std::move(chi));
  // The pairing chi(alpha) = zeta_k^e -> gamma^e = beta.
  const cyclo::CycInt chi_alpha = ctx.chi_.Value(ctx.field()->alpha());
  if (cyclo::ReduceModP(chi_alpha, *ctx.rf_) != ctx.beta()) {
    Fail(ErrorCode::kBadArgument, "character does not reduce to beta");
  }
  return ctx;
}

const cyclo::CycInt& AnalysisContext::K(const cyclo::Character& psi) const {
  std::lock_guard<std::mutex> lock(k_cache_->mu);
  auto it = k_cache_->values.find(psi.index());
  if (it == k_cache_->values.end()) {
    it = k_cache_->values.emplace(psi.index(), cyclo::KSum(psi)).first;
  }
  return it->second;
}

}  // namespace slce::criteria
