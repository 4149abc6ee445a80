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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "slce/arith.hpp"
#include "slce/criteria/checks.hpp"
#include "slce/criteria/context.hpp"
#include "slce/criteria/profile.hpp"
#include "slce/criteria/semiprimitive.hpp"
#include "slce/criteria/sweep.hpp"
#include "slce/cyclo/gauss.hpp"
#include "slce/error.hpp"
#include "slce/polybin/linear_complexity.hpp"
#include "slce/polybin/poly_algos.hpp"

using namespace slce::criteria;
using slce::ErrorCode;
using slce::ff::ExtField;
using slce::ff::ResidueField;
using slce::polybin::BinaryPoly;
using slce::seq::SlceSequence;

namespace {

std::shared_ptr<const SlceSequence> Seq(uint32_t p, uint32_t m) {
  return std::make_shared<const SlceSequence>(SlceSequence::Generate(ExtField::Build(p, m), 2));
}

AnalysisContext Ctx(uint32_t p, uint32_t m, uint64_t k, uint64_t e) {
  return AnalysisContext::Make(Seq(p, m), std::make_shared<const ResidueField>(ResidueField::Build(k)), e);
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const slce::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kBadArgument;
}

// Every context (q, k, e) with q <= q_max.
template <typename Fn>
void ForEachContext(uint64_t q_max, Fn&& fn) {
  for (auto [p, m] : OddPrimePowers(q_max)) {
    auto seq = Seq(p, m);
    for (uint64_t k : slce::Divisors(seq->t_prime())) {
      if (k == 1) continue;
      auto rf = std::make_shared<const ResidueField>(ResidueField::Build(k));
      for (uint64_t e = 1; e < k; ++e) {
        if (std::gcd(e, k) == 1) fn(AnalysisContext::Make(seq, rf, e));
      }
    }
  }
}

}  // namespace

TEST_CASE("q = 7 context") {
  const AnalysisContext ctx = Ctx(7, 1, 3, 1);
  CHECK(!DerivativeVanishesDirect(ctx, 0));
  CHECK(!BinomialSumCheck(ctx, 0));
  CHECK(!TwistedSumCheck(ctx, 0));
  CHECK(!ClosedFormCheck(ctx, 0));
  CHECK(CappedMultiplicity(ctx) == 0);
  CHECK(CodeOf([&] { CosetSystemCheck(ctx, 2); }) == ErrorCode::kHOutOfRange);
  CHECK(CodeOf([&] { CosetSystemCheck(ctx, 0); }) == ErrorCode::kHOutOfRange);
  CHECK(CodeOf([&] { ClosedFormCheck(ctx, 2); }) == ErrorCode::kPreconditionUnmet);
  CHECK(CodeOf([&] { BinomialSumCheck(ctx, 2); }) == ErrorCode::kBadArgument);
  CHECK(CodeOf([] { Ctx(7, 1, 5, 1); }) == ErrorCode::kBadArgument);
  CHECK(CodeOf([] { Ctx(19, 1, 9, 3); }) == ErrorCode::kBadArgument);
}

TEST_CASE("coset sums") {
  ForEachContext(64, [](const AnalysisContext& ctx) {
    const auto& rf = ctx.rf();
    // h = 0 collapses to S(beta).
    CHECK(CosetSum(ctx, 0, 0) == rf.Evaluate(slce::seq::CharacteristicPoly(ctx.seq()), ctx.beta()));
    for (unsigned h = 1; h <= ctx.u(); ++h) {
      BinaryPoly total;
      for (uint64_t i = 0; i < (uint64_t{1} << h); ++i) total += CosetSum(ctx, i, h);
      CHECK(total == CosetSum(ctx, 0, 0));
    }
  });
}

TEST_CASE("multiplicity agrees with the Hasse-derivative route") {
  ForEachContext(128, [](const AnalysisContext& ctx) {
    const uint64_t direct = slce::polybin::RootMultiplicity(
        slce::seq::CharacteristicPoly(ctx.seq()), ctx.beta(), ctx.rf());
    CHECK(CappedMultiplicity(ctx) == std::min<uint64_t>(direct, uint64_t{1} << ctx.u()));
  });
}

TEST_CASE("criteria agree with direct evaluation") {
  uint64_t contexts = 0, vanishing = 0;
  ForEachContext(81, [&](const AnalysisContext& ctx) {
    ++contexts;
    CAPTURE(ctx.field()->q());
    CAPTURE(ctx.k());
    CAPTURE(ctx.e());
    const uint64_t mult = CappedMultiplicity(ctx);
    bool prefix = true;
    for (uint64_t t = 0; t < (uint64_t{1} << ctx.u()); ++t) {
      const bool direct = DerivativeVanishesDirect(ctx, t);
      vanishing += direct;
      // Multiplicity exceeds t exactly when D_0 .. D_t all vanish at beta.
      prefix = prefix && direct;
      CHECK(prefix == (mult > t));
      CHECK(BinomialSumCheck(ctx, t) == direct);
      CHECK(TwistedSumCheck(ctx, t) == direct);
    }
    CHECK(TwistedSumCheck(ctx, 0) == BinomialSumCheck(ctx, 0));
    for (unsigned h = 1; h <= ctx.u(); ++h) {
      const bool deep = mult >= (uint64_t{1} << h);
      CHECK(CosetSystemCheck(ctx, h) == deep);
      if (deep) CHECK(NecessaryConditionCheck(ctx, h));
    }
    for (uint64_t t = 0; t < 4; ++t) {
      if (t >= 2 && ctx.field()->q() % 4 != 1) continue;
      CHECK(ClosedFormCheck(ctx, t) == TwistedSumCheck(ctx, t));
    }
  });
  CHECK(contexts > 100);
  CHECK(vanishing > 0);
}

TEST_CASE("q = 25, k = 3 examples") {
  for (uint64_t e : {1, 2}) {
    const AnalysisContext ctx = Ctx(5, 2, 3, e);
    CHECK(ClosedFormCheck(ctx, 1) == TwistedSumCheck(ctx, 1));
    CHECK(NecessaryConditionCheck(ctx, 1) == ClosedFormCheck(ctx, 0));
  }
}

TEST_CASE("Galois conjugates share verdicts") {
  ForEachContext(128, [](const AnalysisContext& ctx) {
    const uint64_t k = ctx.k();
    const uint64_t e2 = (2 * ctx.e()) % k;
    auto seq = std::make_shared<const SlceSequence>(ctx.seq());
    auto rf = std::make_shared<const ResidueField>(ctx.rf());
    const AnalysisContext conj = AnalysisContext::Make(seq, rf, e2);
    CHECK(BinomialSumCheck(ctx, 0) == BinomialSumCheck(conj, 0));
    CHECK(CappedMultiplicity(ctx) == CappedMultiplicity(conj));
  });
}

TEST_CASE("multiplicity profiles") {
  const auto p7 = ComputeMultiplicityProfile(*Seq(7, 1));
  CHECK(p7.L == 6);
  CHECK(p7.multiplicity.at({1, 0}) == 0);
  CHECK(p7.multiplicity.at({3, 1}) == 0);
  const auto p5 = ComputeMultiplicityProfile(*Seq(5, 1));
  CHECK(p5.multiplicity.at({1, 0}) == 1);
  CHECK(p5.L == 3);

  for (auto [p, m] : OddPrimePowers(128)) {
    const auto s = Seq(p, m);
    CAPTURE(s->period());
    const auto bits = s->Bits();
    CHECK(ComputeMultiplicityProfile(*s).L == oracle::LinearComplexity(bits));
  }
}

TEST_CASE("linear complexity and profile do not depend on the primitive element") {
  for (auto [p, m] : OddPrimePowers(64)) {
    auto field = ExtField::Build(p, m);
    const auto base = ComputeMultiplicityProfile(SlceSequence::Generate(field, 2));
    for (auto alpha : field->PrimitiveElements()) {
      const auto s = SlceSequence::Generate(field->WithAlpha(alpha), 2);
      const auto profile = ComputeMultiplicityProfile(s);
      CHECK(profile.L == base.L);
      CHECK(profile.multiplicity == base.multiplicity);
    }
  }
}

TEST_CASE("semiprimitive parameters and the parity rule") {
  const auto a = ComputeSemiprimitiveParams(5, 2, 3, 1);
  CHECK(a.vprime == 1);
  CHECK(a.wprime == 1);
  CHECK(!SemiprimitivePredict(5, 2, 3, 1));
  CHECK(SemiprimitivePredict(5, 4, 3, 1));
  CHECK(RepunitPowerDivides(*Seq(5, 4), 3, 1));
  const auto c = ComputeSemiprimitiveParams(3, 4, 5, 1);
  CHECK(c.vprime == 2);
  CHECK(c.wprime == 1);
  CHECK(!SemiprimitivePredict(3, 4, 5, 1));
  CHECK(CodeOf([] { ComputeSemiprimitiveParams(7, 1, 3, 1); }) == ErrorCode::kNotSemiprimitive);
  CHECK(CodeOf([] { UniformKCheck(7, 2, 3, 1); }) == ErrorCode::kNotSemiprimitive);

  for (const auto& sc : EnumerateSemiprimitiveCases(1024)) {
    CAPTURE(sc.p);
    CAPTURE(sc.m);
    CAPTURE(sc.k);
    CAPTURE(sc.h);
    const auto s = Seq(sc.p, sc.m);
    CHECK(SemiprimitivePredict(sc.p, sc.m, sc.k, sc.h) == RepunitPowerDivides(*s, sc.k, sc.h));
    CHECK(MultiplicityGapHolds(*s, sc.k, sc.h));
  }
}

TEST_CASE("twisted K values in the semiprimitive case") {
  // All K(eta_{i/2^h} chi) coincide and are rational integers; they equal
  // G(rho) times (-1)^(w (p^v + 1) / 2k), which differs from G(rho) itself
  // in some cases (q = 25, k = 3 among them).
  CHECK(!UniformKCheck(5, 2, 3, 1));
  CHECK(UniformKCheck(11, 2, 3, 1));
  for (const auto& sc : EnumerateSemiprimitiveCases(1024)) {
    auto field = ExtField::Build(sc.p, sc.m);
    const auto v = *slce::MinimalNegativeOneExponent(sc.p, sc.k);
    const uint64_t w = sc.m / (2 * v);
    const bool flip = (w * ((slce::IPow(sc.p, v) + 1) / (2 * sc.k))) % 2 == 1;
    const auto g = *slce::cyclo::QuadraticGaussClosed(sc.p, sc.m).AsInteger(sc.p, sc.m);
    const slce::cyclo::BigInt expected = flip ? slce::cyclo::BigInt(-g) : g;
    for (uint64_t e = 1; e < sc.k; ++e) {
      if (std::gcd(e, sc.k) != 1) continue;
      const auto chi = slce::cyclo::Character::Eta(field, e, sc.k);
      for (uint64_t i = 0; i < (uint64_t{1} << sc.h); ++i) {
        slce::cyclo::BigInt value;
        REQUIRE(slce::cyclo::KSum(slce::cyclo::Character::Eta(field, i, uint64_t{1} << sc.h) * chi)
                    .IsInteger(&value));
        CHECK(value == expected);
      }
    }
    CHECK(UniformKCheck(sc.p, sc.m, sc.k, sc.h) == !flip);
  }
}

TEST_CASE("sweep plumbing") {
  CHECK(ParseChecks("1,2") == std::set{Check::kBinomialSum, Check::kTwistedSum});
  CHECK(ParseChecks("3").count(Check::kCosetSums));
  CHECK(ParseChecks("all").size() == 12);
  CHECK(CodeOf([] { ParseChecks("thm9"); }) == ErrorCode::kBadArgument);
  CHECK(CodeOf([] { ParseChecks(""); }) == ErrorCode::kBadArgument);

  const auto q27 = OddPrimePowers(27);
  CHECK(q27.size() == 11);
  CHECK(q27.front() == std::pair{3u, 1u});
  CHECK(q27.back() == std::pair{3u, 3u});
  CHECK(OddPrimePowers(100, 3).size() == 4);

  SweepConfig config;
  config.q_max = 5;
  config.checks = ParseChecks("all");
  const auto empty = RunVerification(config);
  CHECK(empty.contexts == 0);
  CHECK(empty.records.empty());

  config.q_max = 1 << 17;
  CHECK(CodeOf([&] { RunVerification(config); }) == ErrorCode::kSizeExceeded);

  config.q_max = 81;
  config.jobs = 1;
  const auto serial = RunVerification(config);
  config.jobs = 4;
  const auto parallel = RunVerification(config);
  CHECK(ToJsonLines(serial.records) == ToJsonLines(parallel.records));
  CHECK(ToCsv(serial.records) == ToCsv(parallel.records));
  CHECK(serial.checks == serial.records.size());
  for (const auto& r : serial.records) {
    if (r.check != Check::kUniformK) CHECK(r.match);
  }

  config.q_max = 128;
  for (const auto& row : RunComplexitySweep(config)) {
    CHECK(row.consistent);
    CHECK(row.ones * 2 == row.T);
  }
}
