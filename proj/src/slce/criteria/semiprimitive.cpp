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

#include "slce/criteria/semiprimitive.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "slce/arith.hpp"
#include "slce/criteria/checks.hpp"
#include "slce/cyclo/character.hpp"
#include "slce/cyclo/gauss.hpp"
#include "slce/error.hpp"
#include "slce/ff/residue_field.hpp"

namespace slce::criteria {

SemiprimitiveParams ComputeSemiprimitiveParams(uint32_t p, uint32_t m,
                                               uint64_t k, unsigned h) {
  const uint64_t modulus = k << h;
  const auto v = MinimalNegativeOneExponent(p, modulus);
  if (!v || m % (2 * *v) != 0) {
    Fail(ErrorCode::kNotSemiprimitive,
         "no v with 2^h k | p^v + 1 and m = 2vw");
  }
  const auto vprime = MinimalNegativeOneExponent(p, k);
  if (!vprime || m % (2 * *vprime) != 0) {
    Fail(ErrorCode::kNotSemiprimitive, "no v' with k | p^v' + 1 and m = 2v'w'");
  }
  return {*v, m / (2 * *v), *vprime, m / (2 * *vprime)};
}

bool UniformKCheck(uint32_t p, uint32_t m, uint64_t k, unsigned h, uint64_t cap) {
  ComputeSemiprimitiveParams(p, m, k, h);
  auto field = ff::ExtField::Build(p, m, cap);
  const auto gauss = cyclo::QuadraticGaussClosed(p, m).AsInteger(p, m);
  if (!gauss) return false;
  const uint64_t M = uint64_t{1} << h;
  for (uint64_t e = 1; e < k; ++e) {
    if (std::gcd(e, k) != 1) continue;
    const cyclo::Character chi = cyclo::Character::Eta(field, e, k);
    for (uint64_t i = 0; i < M; ++i) {
      const cyclo::Character psi = cyclo::Character::Eta(field, i, M) * chi;
      cyclo::BigInt value;
      if (!cyclo::KSum(psi).IsInteger(&value) || value != *gauss) return false;
    }
  }
  return true;
}

bool SemiprimitivePredict(uint32_t p, uint32_t m, uint64_t k, unsigned h) {
  const SemiprimitiveParams params = ComputeSemiprimitiveParams(p, m, k, h);
  const bool wprime_even = params.wprime % 2 == 0;
  if (p % 4 == 1) return wprime_even;
  return wprime_even || (params.vprime * params.wprime) % 2 == 1;
}

bool RepunitPowerDivides(const seq::SlceSequence& s, uint64_t k, unsigned h) {
  polybin::BinaryPoly repunit;
  for (uint64_t i = 0; i < k; ++i) repunit.SetCoeff(i, true);
  const polybin::BinaryPoly divisor = repunit.FrobeniusPower(h);
  return (seq::CharacteristicPoly(s) % divisor).IsZero();
}

bool MultiplicityGapHolds(const seq::SlceSequence& s, uint64_t k, unsigned h) {
  const ff::ResidueField rf = ff::ResidueField::Build(k);
  const std::vector<uint8_t> bits = s.Bits();
  const uint64_t floor = uint64_t{1} << h;
  for (uint64_t e = 1; e < k; ++e) {
    if (std::gcd(e, k) != 1) continue;
    const uint64_t mult = CappedMultiplicity(bits, s.u(), rf.GammaPower(e), rf);
    if (mult != 0 && mult < floor) return false;
  }
  return true;
}

std::vector<SemiprimitiveCase> EnumerateSemiprimitiveCases(uint64_t q_max) {
  std::vector<SemiprimitiveCase> out;
  for (uint32_t p = 3; p <= q_max; p += 2) {
    if (!IsPrime(p)) continue;
    uint64_t q = p;
    for (uint32_t m = 1; q <= q_max; ++m, q *= p) {
      const uint64_t T = q - 1;
      for (uint64_t k : Divisors(T >> TwoAdicValuation(T))) {
        if (k == 1) continue;
        for (unsigned h = 1; (uint64_t{1} << h) * k <= T && T % ((uint64_t{1} << h) * k) == 0; ++h) {
          const auto v = MinimalNegativeOneExponent(p, k << h);
          if (v && m % (2 * *v) == 0) out.push_back({p, m, k, h});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SemiprimitiveCase& a, const SemiprimitiveCase& b) {
    return std::make_tuple(IPow(a.p, a.m), a.k, a.h) < std::make_tuple(IPow(b.p, b.m), b.k, b.h);
  });
  return out;
}

}  // namespace slce::criteria
