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

#include "slce/cyclo/ideal.hpp"

#include <bit>
#include <string>

#include "slce/error.hpp"
#include "slce/polybin/poly_algos.hpp"

namespace slce::cyclo {
namespace {

polybin::BinaryPoly ParityResidue(const CycInt& x) {
  polybin::BinaryPoly r;
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (boost::multiprecision::bit_test(x.coeffs()[i], 0)) r.SetCoeff(i, true);
  }
  return r;
}

}  // namespace

IdealSpec::IdealSpec(uint64_t k, polybin::BinaryPoly fcan, unsigned h,
                     unsigned two_power)
    : k_(k), fcan_(std::move(fcan)), h_(h), two_power_(two_power) {
  if (k_ % 2 == 0) Fail(ErrorCode::kEvenK, "k must be odd");
  conductor_ = NormalizeConductor(k_ << h_);
  const auto lift = static_cast<unsigned>(std::countr_zero(conductor_ / k_));
  generator_ = polybin::Gcd(fcan_.FrobeniusPower(lift),
                            polybin::CyclotomicMod2(conductor_));
}

polybin::BinaryPoly ReduceModP(const CycInt& x, const ff::ResidueField& rf) {
  if (x.conductor() != NormalizeConductor(rf.k())) {
    Fail(ErrorCode::kConductorMismatch,
         "expected conductor " + std::to_string(rf.k()) + ", got " +
             std::to_string(x.conductor()));
  }
  return rf.Reduce(ParityResidue(x));
}

bool IdealMembership(const CycInt& x, const IdealSpec& spec) {
  if (x.conductor() != spec.working_conductor()) {
    Fail(ErrorCode::kConductorMismatch,
         "expected conductor " + std::to_string(spec.working_conductor()) +
             ", got " + std::to_string(x.conductor()));
  }
  const BigInt scale = BigInt(1) << spec.two_power();
  if (!x.DivisibleBy(scale)) return false;
  const polybin::BinaryPoly residue = ParityResidue(x.DivExact(scale));
  return (residue % spec.residue_generator()).IsZero();
}

}  // namespace slce::cyclo
