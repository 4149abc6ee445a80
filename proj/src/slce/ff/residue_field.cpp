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

#include "slce/ff/residue_field.hpp"

#include "slce/arith.hpp"
#include "slce/error.hpp"
#include "slce/polybin/poly_algos.hpp"

namespace slce::ff {

ResidueField::ResidueField(uint64_t k, uint64_t f, BinaryPoly modulus)
    : k_(k),
      f_(f),
      modulus_(std::move(modulus)),
      gamma_(BinaryPoly::Monomial(1) % modulus_) {}

ResidueField ResidueField::Build(uint64_t k) {
  if (k % 2 == 0) Fail(ErrorCode::kEvenK, "k must be odd");
  if (k == 1) Fail(ErrorCode::kKisOne, "k must exceed 1");
  return ForOrder(k);
}

ResidueField ResidueField::ForOrder(uint64_t k) {
  if (k % 2 == 0) Fail(ErrorCode::kEvenK, "k must be odd");
  const uint64_t f = k == 1 ? 1 : MultiplicativeOrder(2, k);
  return ResidueField(k, f, polybin::FactorPhiMod2(k).front());
}

ResidueField ResidueField::WithModulus(uint64_t k, BinaryPoly modulus) {
  if (k % 2 == 0) Fail(ErrorCode::kEvenK, "k must be odd");
  const uint64_t f = k == 1 ? 1 : MultiplicativeOrder(2, k);
  if (static_cast<uint64_t>(modulus.degree()) != f ||
      !(polybin::CyclotomicMod2(k) % modulus).IsZero()) {
    Fail(ErrorCode::kBadArgument, "modulus is not a factor of Phi_k mod 2");
  }
  return ResidueField(k, f, std::move(modulus));
}

BinaryPoly ResidueField::Mul(const BinaryPoly& a, const BinaryPoly& b) const {
  return polybin::MulMod(a, b, modulus_);
}

BinaryPoly ResidueField::Pow(const BinaryPoly& a, uint64_t n) const {
  return polybin::PowMod(a, n, modulus_);
}

BinaryPoly ResidueField::Evaluate(const BinaryPoly& poly,
                                  const BinaryPoly& x) const {
  BinaryPoly acc;
  const BinaryPoly one = BinaryPoly::One();
  for (int64_t i = poly.degree(); i >= 0; --i) {
    acc = Mul(acc, x);
    if (poly.Coeff(static_cast<size_t>(i))) acc = Reduce(acc + one);
  }
  return acc;
}

}  // namespace slce::ff
