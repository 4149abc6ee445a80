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

#include "slce/polybin/poly_algos.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "slce/arith.hpp"
#include "slce/error.hpp"
#include "slce/ff/residue_field.hpp"

namespace slce::polybin {
namespace {

// Splits g, a squarefree product of irreducibles of degree f, using the
// traces Tr(X^j) = sum_{i<f} X^(j 2^i) mod g. For two distinct factors some
// monomial X^j with j < deg g has different traces at their roots, so the
// scan over j always finds a split.
void EqualDegreeSplit(const BinaryPoly& g, uint64_t f,
                      std::vector<BinaryPoly>& out) {
  if (static_cast<uint64_t>(g.degree()) == f) {
    out.push_back(g);
    return;
  }
  for (int64_t j = 1; j < g.degree(); ++j) {
    BinaryPoly term = BinaryPoly::Monomial(static_cast<size_t>(j)) % g;
    BinaryPoly trace;
    for (uint64_t i = 0; i < f; ++i) {
      trace += term;
      term = MulMod(term, term, g);
    }
    BinaryPoly common = Gcd(g, trace);
    if (common.degree() > 0 && common.degree() < g.degree()) {
      EqualDegreeSplit(common, f, out);
      EqualDegreeSplit(g / common, f, out);
      return;
    }
  }
  Fail(ErrorCode::kBadArgument, "equal-degree split failed");
}

}  // namespace

BinaryPoly HasseDerivative(const BinaryPoly& f, uint64_t t) {
  BinaryPoly out;
  for (int64_t n = f.degree(); n >= static_cast<int64_t>(t); --n) {
    const auto un = static_cast<uint64_t>(n);
    if (f.Coeff(un) && BinomMod2(un, t)) out.SetCoeff(un - t, true);
  }
  return out;
}

unsigned BitLengthH(uint64_t t) {
  return static_cast<unsigned>(std::bit_width(t));
}

std::vector<uint64_t> IndexSet(uint64_t t) {
  const uint64_t size = uint64_t{1} << BitLengthH(t);
  std::vector<uint64_t> out;
  for (uint64_t i = 0; i < size; ++i) {
    if (BinomMod2(i, t)) out.push_back(i);
  }
  return out;
}

BinaryPoly CyclotomicMod2(uint64_t k) {
  if (k == 0) Fail(ErrorCode::kBadArgument, "cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<uint64_t, BinaryPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  BinaryPoly result = BinaryPoly::XnMinusOne(k);
  for (uint64_t d : Divisors(k)) {
    if (d != k) result = result / CyclotomicMod2(d);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(k, result);
  return result;
}

std::vector<BinaryPoly> FactorPhiMod2(uint64_t k) {
  if (k % 2 == 0) Fail(ErrorCode::kEvenK, "k must be odd");
  const BinaryPoly phi = CyclotomicMod2(k);
  const uint64_t f = k == 1 ? 1 : MultiplicativeOrder(2, k);
  std::vector<BinaryPoly> factors;
  EqualDegreeSplit(phi, f, factors);
  std::sort(factors.begin(), factors.end());
  return factors;
}

uint64_t RootMultiplicity(const BinaryPoly& f, const BinaryPoly& beta,
                          const ff::ResidueField& rf) {
  if (f.IsZero()) Fail(ErrorCode::kZeroPolynomial, "zero polynomial has no multiplicity");
  for (uint64_t t = 0;; ++t) {
    if (!rf.Evaluate(HasseDerivative(f, t), beta).IsZero()) return t;
  }
}

}  // namespace slce::polybin
