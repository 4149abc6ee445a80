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

#ifndef SLCE_CRITERIA_SWEEP_HPP_
#define SLCE_CRITERIA_SWEEP_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slce/ff/ext_field.hpp"

namespace slce::criteria {

enum class Check {
  kBinomialSum,
  kTwistedSum,
  kCosetSystem,
  kCosetSums,
  kNecessary,
  kClosedForm0,
  kClosedForm1,
  kClosedForm2,
  kClosedForm3,
  kUniformK,
  kGap,
  kParityRule,
};

const char* CheckName(Check check);
// Accepts "1", "2", "3", "thm1".., "cosets", "nec", "prop1".."prop4",
// "lemma1", "lemma2", "semi" and "all"; throws BadArgument otherwise.
std::set<Check> ParseChecks(std::string_view list);

// One verdict. For per-context checks (k, e) identify beta = gamma_k^e and
// `param` is t or h; semiprimitive checks use e = 0 and param = h.
struct CriterionRecord {
  uint32_t p = 0;
  uint32_t m = 0;
  uint64_t q = 0;
  uint64_t k = 0;
  uint64_t e = 0;
  char param_name = 't';
  uint64_t param = 0;
  Check check = Check::kBinomialSum;
  bool predicted = false;
  bool ground_truth = false;
  bool match = false;
};

struct SweepConfig {
  uint64_t q_max = 128;
  std::optional<uint32_t> p_filter;
  std::set<Check> checks;
  unsigned jobs = 1;
  uint64_t field_cap = ff::kDefaultFieldCap;
};

struct CriterionReport {
  std::vector<CriterionRecord> records;  // sorted by (q, k, e, check, param)
  uint64_t contexts = 0;
  uint64_t checks = 0;
  uint64_t mismatches = 0;
};

CriterionReport RunVerification(const SweepConfig& config);

std::string ToJsonLines(const std::vector<CriterionRecord>& records);
std::string ToCsv(const std::vector<CriterionRecord>& records);

struct ComplexityRow {
  uint32_t p = 0;
  uint32_t m = 0;
  uint64_t q = 0;
  uint64_t T = 0;
  uint64_t u = 0;
  uint64_t ones = 0;
  uint64_t L_bm = 0;
  uint64_t L_gcd = 0;
  uint64_t L_profile = 0;
  bool consistent = false;
};

// Linear complexity by all three routes for every odd q <= q_max.
std::vector<ComplexityRow> RunComplexitySweep(const SweepConfig& config);

std::string ToJsonLines(const std::vector<ComplexityRow>& rows);
std::string ToCsv(const std::vector<ComplexityRow>& rows);

// Odd prime powers (p, m) with p^m <= q_max, ordered by q.
std::vector<std::pair<uint32_t, uint32_t>> OddPrimePowers(
    uint64_t q_max, std::optional<uint32_t> p_filter = std::nullopt);

}  // namespace slce::criteria

#endif  // SLCE_CRITERIA_SWEEP_HPP_
