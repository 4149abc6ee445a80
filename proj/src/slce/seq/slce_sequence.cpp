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

#include "slce/seq/slce_sequence.hpp"

#include <json.hpp>

#include "slce/arith.hpp"
#include "slce/error.hpp"

namespace slce::seq {

SlceSequence::SlceSequence(uint32_t d, std::vector<uint32_t> terms)
    : d_(d), terms_(std::move(terms)) {
  if (d_ < 2) Fail(ErrorCode::kBadAlphabet, "alphabet size must be at least 2");
  for (uint32_t v : terms_) {
    if (v >= d_) Fail(ErrorCode::kBadArgument, "term outside alphabet");
  }
  if (!terms_.empty()) {
    u_ = TwoAdicValuation(terms_.size());
    t_prime_ = terms_.size() >> u_;
  }
}

SlceSequence SlceSequence::Generate(std::shared_ptr<const ff::ExtField> field,
                                    uint32_t d) {
  const uint64_t T = field->group_order();
  if (!IsPrime(d) || T % d != 0) {
    Fail(ErrorCode::kBadAlphabet,
         "d must be a prime dividing q - 1, got " + std::to_string(d));
  }
  std::vector<uint32_t> terms(T, 0);
  for (uint64_t n = 0; n < T; ++n) {
    const int64_t log = field->LogOnePlusPower(n);
    if (log >= 0) terms[n] = static_cast<uint32_t>(log % d);
  }
  SlceSequence s(d, std::move(terms));
  s.field_ = std::move(field);
  return s;
}

std::vector<uint8_t> SlceSequence::Bits() const {
  if (d_ != 2) Fail(ErrorCode::kNotBinary, "sequence is not binary");
  return {terms_.begin(), terms_.end()};
}

polybin::BinaryPoly CharacteristicPoly(const SlceSequence& s) {
  const std::vector<uint8_t> bits = s.Bits();
  return polybin::BinaryPoly::FromBits(bits);
}

int64_t Autocorrelation(const SlceSequence& s, uint64_t tau) {
  if (s.d() != 2) Fail(ErrorCode::kNotBinary, "autocorrelation needs d = 2");
  const uint64_t T = s.period();
  if (tau >= T) Fail(ErrorCode::kBadArgument, "shift must be below the period");
  const auto& t = s.terms();
  int64_t sum = 0;
  for (uint64_t n = 0; n < T; ++n) sum += t[(n + tau) % T] == t[n] ? 1 : -1;
  return sum;
}

BalanceReport Balance(const SlceSequence& s) {
  BalanceReport report;
  for (uint32_t v : s.terms()) ++report.counts[v];
  report.ones = report.counts.count(1) ? report.counts.at(1) : 0;
  report.half_period = s.period() / 2;
  return report;
}

std::string ToJson(const SlceSequence& s) {
  nlohmann::ordered_json j;
  j["p"] = s.field() ? s.field()->p() : 0;
  j["m"] = s.field() ? s.field()->m() : 0;
  j["d"] = s.d();
  j["alpha_dlog_basis"] = "canonical";
  j["terms"] = s.terms();
  return j.dump();
}

std::string ToBitString(const SlceSequence& s) {
  std::string out;
  for (uint8_t b : s.Bits()) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace slce::seq
