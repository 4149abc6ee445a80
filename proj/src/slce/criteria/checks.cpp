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

#include "slce/criteria/checks.hpp"

#include <string>

#include "slce/cyclo/ideal.hpp"
#include "slce/error.hpp"
#include "slce/polybin/poly_algos.hpp"

namespace slce::criteria {
namespace {

using cyclo::Character;
using cyclo::CycInt;
using cyclo::IdealSpec;
using polybin::BinomMod2;

void RequireT(const AnalysisContext& ctx, uint64_t t) {
  if (t >= (uint64_t{1} << ctx.u())) {
    Fail(ErrorCode::kBadArgument, "t must be below 2^u");
  }
}

void RequireH(const AnalysisContext& ctx, unsigned h) {
  if (h < 1 || h > ctx.u()) {
    Fail(ErrorCode::kHOutOfRange,
         "h must lie in [1, u], u = " + std::to_string(ctx.u()));
  }
}

// Exponent of eta_{j/M}(-1) as a power of zeta_M.
uint64_t EtaAtMinusOne(const AnalysisContext& ctx, uint64_t j, uint64_t M) {
  const Character eta = Character::Eta(ctx.field(), j, M);
  return eta.ExponentAtPower(ctx.T() / 2) * (M / eta.order());
}

CycInt ZetaM(uint64_t M, int64_t e, uint64_t N) {
  return CycInt::ZetaPower(M, e).Embed(N);
}

// K(eta_{j/M} chi) embedded into conductor N.
CycInt TwistedK(const AnalysisContext& ctx, uint64_t j, uint64_t M, uint64_t N) {
  return ctx.K(Character::Eta(ctx.field(), j, M) * ctx.chi()).Embed(N);
}

}  // namespace

bool DerivativeVanishesDirect(const AnalysisContext& ctx, uint64_t t) {
  RequireT(ctx, t);
  const auto& terms = ctx.seq().terms();
  std::vector<uint8_t> parity(ctx.k(), 0);
  for (uint64_t n = 0; n < terms.size(); ++n) {
    if (terms[n] != 0 && BinomMod2(n, t)) parity[n % ctx.k()] ^= 1;
  }
  BinaryPoly sum;
  for (uint64_t r = 0; r < ctx.k(); ++r) {
    if (parity[r]) sum += ctx.BetaPower(r);
  }
  return sum.IsZero();
}

BinaryPoly CosetSum(const AnalysisContext& ctx, uint64_t i, unsigned h) {
  if (h > ctx.u()) Fail(ErrorCode::kHOutOfRange, "2^h must divide 2^u");
  const uint64_t M = uint64_t{1} << h;
  if (i >= M) Fail(ErrorCode::kBadArgument, "coset index must be below 2^h");
  const auto& terms = ctx.seq().terms();
  BinaryPoly sum;
  for (uint64_t n = i; n < terms.size(); n += M) {
    if (terms[n] != 0) sum += ctx.BetaPower(n);
  }
  return sum;
}

uint64_t CappedMultiplicity(std::span<const uint8_t> bits, uint64_t u,
                            const BinaryPoly& beta, const ff::ResidueField& rf) {
  const uint64_t k = rf.k();
  std::vector<BinaryPoly> powers;
  powers.reserve(k);
  BinaryPoly power = BinaryPoly::One() % rf.modulus();
  for (uint64_t r = 0; r < k; ++r) {
    powers.push_back(power);
    power = rf.Mul(power, beta);
  }
  const uint64_t cap = uint64_t{1} << u;
  std::vector<uint8_t> parity(k);
  for (uint64_t t = 0; t < cap; ++t) {
    std::fill(parity.begin(), parity.end(), 0);
    for (uint64_t n = 0; n < bits.size(); ++n) {
      if (bits[n] != 0 && BinomMod2(n, t)) parity[n % k] ^= 1;
    }
    BinaryPoly sum;
    for (uint64_t r = 0; r < k; ++r) {
      if (parity[r]) sum += powers[r];
    }
    if (!sum.IsZero()) return t;
  }
  return cap;
}

uint64_t CappedMultiplicity(const AnalysisContext& ctx) {
  const uint64_t cap = uint64_t{1} << ctx.u();
  for (uint64_t t = 0; t < cap; ++t) {
    if (!DerivativeVanishesDirect(ctx, t)) return t;
  }
  return cap;
}

CycInt BinomialSumValue(const AnalysisContext& ctx, uint64_t t) {
  RequireT(ctx, t);
  const auto& field = *ctx.field();
  const uint64_t k = ctx.k();
  std::vector<int64_t> counts(k, 0);
  for (uint64_t n = 0; n < ctx.T(); ++n) {
    if (!BinomMod2(n, t)) continue;
    const int64_t log = field.LogOnePlusPower(n);
    if (log < 0) continue;  // rho(0) = 0 at n = T/2
    counts[ctx.chi().ExponentAtPower(n)] += log % 2 == 0 ? 1 : -1;
  }
  if (BinomMod2(ctx.T() / 2, t)) counts[0] += 1;
  return CycInt::FromExponentCounts(k, counts);
}

bool BinomialSumCheck(const AnalysisContext& ctx, uint64_t t) {
  return cyclo::IdealMembership(BinomialSumValue(ctx, t), IdealSpec::For(ctx.rf(), 0, 1));
}

CycInt TwistedSumValue(const AnalysisContext& ctx, uint64_t t) {
  RequireT(ctx, t);
  const unsigned h = polybin::BitLengthH(t);
  const uint64_t M = uint64_t{1} << h;
  const uint64_t N = cyclo::NormalizeConductor(M * ctx.k());
  const std::vector<uint64_t> index_set = polybin::IndexSet(t);
  CycInt sum = CycInt::Integer(N, BinomMod2(ctx.T() / 2, t) ? M : 0);
  for (uint64_t j = 0; j < M; ++j) {
    // sum_{i in I_t} eta_{j/M}(-1) zeta_M^(-ij), as exponent counts mod M.
    std::vector<int64_t> counts(M, 0);
    const uint64_t sign_exp = EtaAtMinusOne(ctx, j, M);
    for (uint64_t i : index_set) counts[(sign_exp + M * M - i * j % M) % M] += 1;
    const CycInt factor = CycInt::FromExponentCounts(M, counts).Embed(N);
    sum += factor * TwistedK(ctx, j, M, N);
  }
  return sum;
}

bool TwistedSumCheck(const AnalysisContext& ctx, uint64_t t) {
  const unsigned h = polybin::BitLengthH(t);
  return cyclo::IdealMembership(TwistedSumValue(ctx, t), IdealSpec::For(ctx.rf(), h, h + 1));
}

bool ClosedFormCheck(const AnalysisContext& ctx, uint64_t t) {
  const uint64_t q = ctx.field()->q();
  const uint64_t k = ctx.k();
  switch (t) {
    case 0: {
      const CycInt value = CycInt::Integer(k, 1) + ctx.K(ctx.chi());
      return cyclo::IdealMembership(value, IdealSpec::For(ctx.rf(), 0, 1));
    }
    case 1: {
      const uint64_t N = cyclo::NormalizeConductor(2 * k);
      const CycInt k0 = TwistedK(ctx, 0, 2, N);
      const CycInt k1 = TwistedK(ctx, 1, 2, N);
      const CycInt value = q % 4 == 1 ? k0 - k1 : CycInt::Integer(N, 2) + k0 + k1;
      return cyclo::IdealMembership(value, IdealSpec::For(ctx.rf(), 1, 2));
    }
    case 2:
    case 3: {
      if (q % 4 != 1) {
        Fail(ErrorCode::kPreconditionUnmet, "closed forms for t = 2, 3 need q = 1 mod 4");
      }
      const uint64_t N = 4 * k;
      const CycInt z = ZetaM(4, 1, N);
      const CycInt one = CycInt::Integer(N, 1);
      const CycInt two = CycInt::Integer(N, 2);
      std::vector<CycInt> kj;
      for (uint64_t j = 0; j < 4; ++j) kj.push_back(TwistedK(ctx, j, 4, N));
      const bool one_mod_eight = q % 8 == 1;
      CycInt value(N);
      if (t == 2) {
        const CycInt tail = (one - z) * kj[1] + (one + z) * kj[3];
        value = one_mod_eight ? two * kj[0] - tail
                              : CycInt::Integer(N, 4) + two * kj[0] + tail;
      } else {
        const CycInt twist = z * kj[1] - z * kj[3];
        value = one_mod_eight ? kj[0] + twist - kj[2] : kj[0] - twist - kj[2];
      }
      return cyclo::IdealMembership(value, IdealSpec::For(ctx.rf(), 2, 3));
    }
    default:
      Fail(ErrorCode::kBadArgument, "closed forms exist for t = 0..3 only");
  }
}

std::vector<CycInt> CosetSystemRows(const AnalysisContext& ctx, unsigned h) {
  RequireH(ctx, h);
  const uint64_t M = uint64_t{1} << h;
  const uint64_t N = cyclo::NormalizeConductor(M * ctx.k());
  std::vector<CycInt> signed_k;
  signed_k.reserve(M);
  for (uint64_t j = 0; j < M; ++j) {
    const int64_t sign_exp = static_cast<int64_t>(EtaAtMinusOne(ctx, j, M));
    signed_k.push_back(ZetaM(M, sign_exp, N) * TwistedK(ctx, j, M, N));
  }
  const uint64_t half_residue = (ctx.T() / 2) % M;
  std::vector<CycInt> rows;
  rows.reserve(M);
  for (uint64_t i = 0; i < M; ++i) {
    CycInt row = CycInt::Integer(N, i == half_residue ? M : 0);
    for (uint64_t j = 0; j < M; ++j) {
      row += ZetaM(M, -static_cast<int64_t>(i * j % M), N) * signed_k[j];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool CosetSystemCheck(const AnalysisContext& ctx, unsigned h) {
  const IdealSpec ideal = IdealSpec::For(ctx.rf(), h, h + 1);
  for (const CycInt& row : CosetSystemRows(ctx, h)) {
    if (!cyclo::IdealMembership(row, ideal)) return false;
  }
  return true;
}

bool NecessaryConditionCheck(const AnalysisContext& ctx, unsigned h) {
  RequireH(ctx, h);
  const uint64_t M = uint64_t{1} << h;
  const uint64_t N = cyclo::NormalizeConductor(M * ctx.k());
  const IdealSpec ideal = IdealSpec::For(ctx.rf(), h, 1);
  const CycInt one = CycInt::Integer(N, 1);
  for (uint64_t j = 0; j < M; ++j) {
    if (!cyclo::IdealMembership(one + TwistedK(ctx, j, M, N), ideal)) return false;
  }
  return true;
}

}  // namespace slce::criteria
