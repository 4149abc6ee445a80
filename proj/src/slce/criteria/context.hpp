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

#ifndef SLCE_CRITERIA_CONTEXT_HPP_
#define SLCE_CRITERIA_CONTEXT_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "slce/cyclo/character.hpp"
#include "slce/cyclo/cyc_int.hpp"
#include "slce/ff/ext_field.hpp"
#include "slce/ff/residue_field.hpp"
#include "slce/seq/slce_sequence.hpp"

namespace slce::criteria {

using polybin::BinaryPoly;

// One instance (q, k, beta, chi, P): beta = gamma^e in F_{2^f} and the
// matching character chi = eta_{e/k}, so that chi(alpha) reduces to beta
// modulo P.
class AnalysisContext {
 public:
  // Throws BadArgument when k does not divide T', k = 1, k != rf.k(), or
  // gcd(e, k) != 1.
  static AnalysisContext Make(std::shared_ptr<const seq::SlceSequence> seq,
                              std::shared_ptr<const ff::ResidueField> rf,
                              uint64_t e);

  const std::shared_ptr<const ff::ExtField>& field() const { return seq_->field(); }
  const seq::SlceSequence& seq() const { return *seq_; }
  const ff::ResidueField& rf() const { return *rf_; }
  uint64_t k() const { return rf_->k(); }
  uint64_t e() const { return e_; }
  uint64_t T() const { return seq_->period(); }
  uint64_t u() const { return seq_->u(); }
  const cyclo::Character& chi() const { return chi_; }
  const BinaryPoly& beta() const { return beta_powers_[1 % k()]; }
  // beta^(r mod k).
  const BinaryPoly& BetaPower(uint64_t r) const { return beta_powers_[r % k()]; }

  // K(psi) = J(rho, psi), memoized per character index.
  const cyclo::CycInt& K(const cyclo::Character& psi) const;

 private:
  AnalysisContext(std::shared_ptr<const seq::SlceSequence> seq,
                  std::shared_ptr<const ff::ResidueField> rf, uint64_t e,
                  cyclo::Character chi);

  struct KCache {
    std::mutex mu;
    std::map<uint64_t, cyclo::CycInt> values;
  };

  std::shared_ptr<const seq::SlceSequence> seq_;
  std::shared_ptr<const ff::ResidueField> rf_;
  uint64_t e_;
  cyclo::Character chi_;
  std::vector<BinaryPoly> beta_powers_;
  std::shared_ptr<KCache> k_cache_;
};

}  // namespace slce::criteria

#endif  // SLCE_CRITERIA_CONTEXT_HPP_
