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

#include "slce/criteria/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "slce/arith.hpp"
#include "slce/criteria/checks.hpp"
#include "slce/criteria/context.hpp"
#include "slce/criteria/profile.hpp"
#include "slce/criteria/semiprimitive.hpp"
#include "slce/error.hpp"
#include "slce/polybin/linear_complexity.hpp"
#include "slce/seq/slce_sequence.hpp"

namespace slce::criteria {
namespace {

// Runs fn(i) for i < count on up to `jobs` threads; results keep index order
// so the output never depends on scheduling.
template <typename Result>
std::vector<Result> ParallelMap(size_t count, unsigned jobs,
                                const std::function<Result(size_t)>& fn) {
  std::vector<Result> results(count);
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

struct FieldOutcome {
  std::vector<CriterionRecord> records;
  uint64_t contexts = 0;
};

class Recorder {
 public:
  Recorder(const SweepConfig& config, uint32_t p, uint32_t m, uint64_t q,
           std::vector<CriterionRecord>& out)
      : config_(config), p_(p), m_(m), q_(q), out_(out) {}

  bool Wants(Check c) const { return config_.checks.count(c) != 0; }

  void Add(Check check, uint64_t k, uint64_t e, char param_name, uint64_t param,
           bool predicted, bool ground_truth, bool match) {
    out_.push_back({p_, m_, q_, k, e, param_name, param, check, predicted,
                    ground_truth, match});
  }
  void Add(Check check, uint64_t k, uint64_t e, char param_name, uint64_t param,
           bool predicted, bool ground_truth) {
    Add(check, k, e, param_name, param, predicted, ground_truth,
        predicted == ground_truth);
  }

 private:
  const SweepConfig& config_;
  uint32_t p_, m_;
  uint64_t q_;
  std::vector<CriterionRecord>& out_;
};

bool AnyContextCheck(const SweepConfig& config) {
  for (Check c : {Check::kBinomialSum, Check::kTwistedSum, Check::kCosetSystem, Check::kCosetSums,
                  Check::kNecessary, Check::kClosedForm0, Check::kClosedForm1, Check::kClosedForm2,
                  Check::kClosedForm3}) {
    if (config.checks.count(c)) return true;
  }
  return false;
}

FieldOutcome VerifyField(const SweepConfig& config, uint32_t p, uint32_t m) {
  FieldOutcome outcome;
  auto field = ff::ExtField::Build(p, m, config.field_cap);
  auto seq = std::make_shared<const seq::SlceSequence>(seq::SlceSequence::Generate(field, 2));
  const uint64_t q = field->q();
  const uint64_t u = seq->u();
  const uint64_t t_count = uint64_t{1} << u;
  Recorder rec(config, p, m, q, outcome.records);

  if (AnyContextCheck(config)) {
    for (uint64_t k : Divisors(seq->t_prime())) {
      if (k == 1) continue;
      auto rf = std::make_shared<const ff::ResidueField>(ff::ResidueField::Build(k));
      for (uint64_t e = 1; e < k; ++e) {
        if (std::gcd(e, k) != 1) continue;
        const AnalysisContext ctx = AnalysisContext::Make(seq, rf, e);
        ++outcome.contexts;
        std::vector<bool> direct(t_count);
        for (uint64_t t = 0; t < t_count; ++t) direct[t] = DerivativeVanishesDirect(ctx, t);
        uint64_t mult = t_count;
        for (uint64_t t = 0; t < t_count; ++t) {
          if (!direct[t]) {
            mult = t;
            break;
          }
        }
        for (uint64_t t = 0; t < t_count; ++t) {
          if (rec.Wants(Check::kBinomialSum)) rec.Add(Check::kBinomialSum, k, e, 't', t, BinomialSumCheck(ctx, t), direct[t]);
          if (rec.Wants(Check::kTwistedSum)) rec.Add(Check::kTwistedSum, k, e, 't', t, TwistedSumCheck(ctx, t), direct[t]);
        }
        for (unsigned h = 1; h <= u; ++h) {
          const bool deep_root = mult >= (uint64_t{1} << h);
          const bool need_system = rec.Wants(Check::kCosetSystem) || rec.Wants(Check::kCosetSums);
          const bool system_holds = need_system && CosetSystemCheck(ctx, h);
          if (rec.Wants(Check::kCosetSystem)) rec.Add(Check::kCosetSystem, k, e, 'h', h, system_holds, deep_root);
          if (rec.Wants(Check::kCosetSums)) {
            bool cosets_vanish = true;
            for (uint64_t i = 0; i < (uint64_t{1} << h) && cosets_vanish; ++i) {
              cosets_vanish = CosetSum(ctx, i, h).IsZero();
            }
            rec.Add(Check::kCosetSums, k, e, 'h', h, system_holds, cosets_vanish);
          }
          if (rec.Wants(Check::kNecessary)) {
            // One-directional: a deep root with the condition false is the only failure.
            const bool nec = NecessaryConditionCheck(ctx, h);
            rec.Add(Check::kNecessary, k, e, 'h', h, nec, deep_root, !deep_root || nec);
          }
        }
        const Check props[] = {Check::kClosedForm0, Check::kClosedForm1, Check::kClosedForm2,
                               Check::kClosedForm3};
        for (uint64_t t = 0; t < 4; ++t) {
          if (!rec.Wants(props[t])) continue;
          if (t >= 2 && q % 4 != 1) continue;
          rec.Add(props[t], k, e, 't', t, ClosedFormCheck(ctx, t), direct[t]);
        }
      }
    }
  }

  if (rec.Wants(Check::kUniformK) || rec.Wants(Check::kGap) ||
      rec.Wants(Check::kParityRule)) {
    for (const SemiprimitiveCase& c : EnumerateSemiprimitiveCases(q)) {
      if (c.p != p || c.m != m) continue;
      if (rec.Wants(Check::kUniformK)) {
        rec.Add(Check::kUniformK, c.k, 0, 'h', c.h, UniformKCheck(p, m, c.k, c.h, config.field_cap), true);
      }
      if (rec.Wants(Check::kGap)) {
        rec.Add(Check::kGap, c.k, 0, 'h', c.h, MultiplicityGapHolds(*seq, c.k, c.h), true);
      }
      if (rec.Wants(Check::kParityRule)) {
        rec.Add(Check::kParityRule, c.k, 0, 'h', c.h, SemiprimitivePredict(p, m, c.k, c.h),
                RepunitPowerDivides(*seq, c.k, c.h));
      }
    }
  }
  return outcome;
}

void CheckCap(const SweepConfig& config) {
  if (config.q_max > config.field_cap) {
    Fail(ErrorCode::kSizeExceeded,
         "q_max " + std::to_string(config.q_max) + " exceeds the field cap " +
             std::to_string(config.field_cap));
  }
}

}  // namespace

const char* CheckName(Check check) {
  switch (check) {
    case Check::kBinomialSum: return "thm1";
    case Check::kTwistedSum: return "thm2";
    case Check::kCosetSystem: return "system_holds";
    case Check::kCosetSums: return "thm3_cosets";
    case Check::kNecessary: return "necessary";
    case Check::kClosedForm0: return "prop1";
    case Check::kClosedForm1: return "prop2";
    case Check::kClosedForm2: return "prop3";
    case Check::kClosedForm3: return "prop4";
    case Check::kUniformK: return "lemma1";
    case Check::kGap: return "lemma2";
    case Check::kParityRule: return "semiprimitive";
  }
  return "unknown";
}

std::set<Check> ParseChecks(std::string_view list) {
  static const std::pair<const char*, std::vector<Check>> kNames[] = {
      {"1", {Check::kBinomialSum}},
      {"thm1", {Check::kBinomialSum}},
      {"2", {Check::kTwistedSum}},
      {"thm2", {Check::kTwistedSum}},
      {"3", {Check::kCosetSystem, Check::kCosetSums}},
      {"system_holds", {Check::kCosetSystem, Check::kCosetSums}},
      {"cosets", {Check::kCosetSums}},
      {"nec", {Check::kNecessary}},
      {"necessary", {Check::kNecessary}},
      {"prop1", {Check::kClosedForm0}},
      {"prop2", {Check::kClosedForm1}},
      {"prop3", {Check::kClosedForm2}},
      {"prop4", {Check::kClosedForm3}},
      {"props", {Check::kClosedForm0, Check::kClosedForm1, Check::kClosedForm2, Check::kClosedForm3}},
      {"lemma1", {Check::kUniformK}},
      {"lemma2", {Check::kGap}},
      {"semi", {Check::kParityRule}},
      {"semiprimitive", {Check::kParityRule}},
  };
  std::set<Check> out;
  std::stringstream stream{std::string(list)};
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    if (token == "all") {
      for (const auto& [name, checks] : kNames) out.insert(checks.begin(), checks.end());
      continue;
    }
    bool known = false;
    for (const auto& [name, checks] : kNames) {
      if (token == name) {
        out.insert(checks.begin(), checks.end());
        known = true;
      }
    }
    if (!known) Fail(ErrorCode::kBadArgument, "unknown theorem selector: " + token);
  }
  if (out.empty()) Fail(ErrorCode::kBadArgument, "no theorems selected");
  return out;
}

std::vector<std::pair<uint32_t, uint32_t>> OddPrimePowers(
    uint64_t q_max, std::optional<uint32_t> p_filter) {
  std::vector<std::tuple<uint64_t, uint32_t, uint32_t>> found;
  for (uint32_t p = 3; p <= q_max; p += 2) {
    if (!IsPrime(p) || (p_filter && *p_filter != p)) continue;
    uint64_t q = p;
    for (uint32_t m = 1; q <= q_max; ++m, q *= p) found.emplace_back(q, p, m);
  }
  std::sort(found.begin(), found.end());
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (const auto& [q, p, m] : found) out.emplace_back(p, m);
  return out;
}

CriterionReport RunVerification(const SweepConfig& config) {
  CheckCap(config);
  if (config.checks.empty()) Fail(ErrorCode::kBadArgument, "no theorems selected");
  const auto fields = OddPrimePowers(config.q_max, config.p_filter);
  const auto outcomes = ParallelMap<FieldOutcome>(
      fields.size(), config.jobs,
      [&](size_t i) { return VerifyField(config, fields[i].first, fields[i].second); });
  CriterionReport report;
  for (const FieldOutcome& o : outcomes) {
    report.contexts += o.contexts;
    report.records.insert(report.records.end(), o.records.begin(), o.records.end());
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CriterionRecord& a, const CriterionRecord& b) {
                     return std::make_tuple(a.q, a.k, a.e, a.check, a.param) <
                            std::make_tuple(b.q, b.k, b.e, b.check, b.param);
                   });
  report.checks = report.records.size();
  report.mismatches = static_cast<uint64_t>(std::count_if(
      report.records.begin(), report.records.end(),
      [](const CriterionRecord& r) { return !r.match; }));
  return report;
}

std::string ToJsonLines(const std::vector<CriterionRecord>& records) {
  std::string out;
  for (const CriterionRecord& r : records) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["p"] = r.p;
    j["m"] = r.m;
    j["k"] = r.k;
    j["e"] = r.e;
    j[std::string(1, r.param_name)] = r.param;
    j["theorem"] = CheckName(r.check);
    j["predicted"] = r.predicted;
    j["ground_truth"] = r.ground_truth;
    j["match"] = r.match;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string ToCsv(const std::vector<CriterionRecord>& records) {
  std::ostringstream out;
  out << "q,p,m,k,e,param,value,theorem,predicted,ground_truth,match\n";
  for (const CriterionRecord& r : records) {
    out << r.q << ',' << r.p << ',' << r.m << ',' << r.k << ',' << r.e << ','
        << r.param_name << ',' << r.param << ',' << CheckName(r.check) << ','
        << r.predicted << ',' << r.ground_truth << ',' << r.match << '\n';
  }
  return out.str();
}

std::vector<ComplexityRow> RunComplexitySweep(const SweepConfig& config) {
  CheckCap(config);
  const auto fields = OddPrimePowers(config.q_max, config.p_filter);
  return ParallelMap<ComplexityRow>(fields.size(), config.jobs, [&](size_t i) {
    const auto [p, m] = fields[i];
    auto field = ff::ExtField::Build(p, m, config.field_cap);
    const seq::SlceSequence s = seq::SlceSequence::Generate(field, 2);
    const std::vector<uint8_t> bits = s.Bits();
    const auto bm = polybin::BerlekampMassey(bits);
    const auto gcd = polybin::LinearComplexityViaGcd(seq::CharacteristicPoly(s), s.period());
    const auto profile = ComputeMultiplicityProfile(s);
    ComplexityRow row;
    row.p = p;
    row.m = m;
    row.q = field->q();
    row.T = s.period();
    row.u = s.u();
    row.ones = seq::Balance(s).ones;
    row.L_bm = bm.L;
    row.L_gcd = gcd.L;
    row.L_profile = profile.L;
    row.consistent = bm.L == gcd.L && gcd.L == profile.L &&
                     bm.minimal_poly == gcd.minimal_poly;
    return row;
  });
}

std::string ToJsonLines(const std::vector<ComplexityRow>& rows) {
  std::string out;
  for (const ComplexityRow& r : rows) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["p"] = r.p;
    j["m"] = r.m;
    j["T"] = r.T;
    j["u"] = r.u;
    j["ones"] = r.ones;
    j["L_bm"] = r.L_bm;
    j["L_gcd"] = r.L_gcd;
    j["L_profile"] = r.L_profile;
    j["consistent"] = r.consistent;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string ToCsv(const std::vector<ComplexityRow>& rows) {
  std::ostringstream out;
  out << "q,p,m,T,u,ones,L_bm,L_gcd,L_profile,consistent\n";
  for (const ComplexityRow& r : rows) {
    out << r.q << ',' << r.p << ',' << r.m << ',' << r.T << ',' << r.u << ','
        << r.ones << ',' << r.L_bm << ',' << r.L_gcd << ',' << r.L_profile << ','
        << r.consistent << '\n';
  }
  return out.str();
}

}  // namespace slce::criteria
