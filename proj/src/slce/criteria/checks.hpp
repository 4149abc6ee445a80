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

#ifndef SLCE_CRITERIA_CHECKS_HPP_
#define SLCE_CRITERIA_CHECKS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "slce/criteria/context.hpp"
#include "slce/cyclo/cyc_int.hpp"

namespace slce::criteria {

// Ground truth: sum_n C(n, t) s_n beta^n = 0 in F_{2^f}, which is
// beta^t S^(t)(beta) = 0. Requires t < 2^u.
bool DerivativeVanishesDirect(const AnalysisContext& ctx, uint64_t t);

// E_i = sum over n = i (mod 2^h) of s_n beta^n.
BinaryPoly CosetSum(const AnalysisContext& ctx, uint64_t i, unsigned h);

// Multiplicity of beta in S(X), capped at 2^u (the multiplicity of beta in
// X^T - 1).
uint64_t CappedMultiplicity(const AnalysisContext& ctx);

// Same, for an arbitrary beta in rf (beta may have order 1).
uint64_t CappedMultiplicity(std::span<const uint8_t> bits, uint64_t u,
                            const BinaryPoly& beta, const ff::ResidueField& rf);

// C(T/2, t) + sum_n C(n, t) rho(alpha^n + 1) chi(alpha^n), conductor k.
// Binomials are the 0/1 Lucas residues.
cyclo::CycInt BinomialSumValue(const AnalysisContext& ctx, uint64_t t);
// BinomialSumValue in 2P.
bool BinomialSumCheck(const AnalysisContext& ctx, uint64_t t);

// 2^h C(T/2, t) + sum_{i in I_t} sum_{j < 2^h} eta_{j/2^h}(-1)
//   zeta_{2^h}^(-ij) K(eta_{j/2^h} chi), conductor 2^h k.
cyclo::CycInt TwistedSumValue(const AnalysisContext& ctx, uint64_t t);
// TwistedSumValue in 2^(h+1) P Z[zeta_{2^h k}].
bool TwistedSumCheck(const AnalysisContext& ctx, uint64_t t);

// The specialized congruences for t = 0..3, evaluated from their own closed
// forms. t = 2 and 3 throw PreconditionUnmet unless q = 1 mod 4.
bool ClosedFormCheck(const AnalysisContext& ctx, uint64_t t);

// Rows sum_j zeta_{2^h}^(-ij) eta_{j/2^h}(-1) K(eta_{j/2^h} chi) + 2^h delta_i
// for i < 2^h, with delta_i = [T/2 = i mod 2^h].
std::vector<cyclo::CycInt> CosetSystemRows(const AnalysisContext& ctx, unsigned h);
// Every row in 2^(h+1) P Z[zeta_{2^h k}]; throws HOutOfRange unless 1 <= h <= u.
bool CosetSystemCheck(const AnalysisContext& ctx, unsigned h);

// 1 + K(eta_{j/2^h} chi) in 2 P Z[zeta_{2^h k}] for every j < 2^h.
bool NecessaryConditionCheck(const AnalysisContext& ctx, unsigned h);

}  // namespace slce::criteria

#endif  // SLCE_CRITERIA_CHECKS_HPP_
