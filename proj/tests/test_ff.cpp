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

#include <set>

#include "oracles.hpp"
#include "slce/error.hpp"
#include "slce/ff/ext_field.hpp"
#include "slce/ff/residue_field.hpp"
#include "slce/polybin/binary_poly.hpp"

using slce::ErrorCode;
using slce::ff::ExtField;
using slce::ff::FieldElement;
using slce::ff::FieldOp;
using slce::ff::ResidueField;
using slce::polybin::BinaryPoly;

namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const slce::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kBadArgument;
}

}  // namespace

TEST_CASE("field construction and canonical choices") {
  auto f9 = ExtField::Build(3, 2);
  CHECK(f9->q() == 9);
  CHECK(f9->group_order() == 8);

  auto f5 = ExtField::Build(5, 1);
  CHECK(f5->alpha().code == 2);
  auto f7 = ExtField::Build(7, 1);
  CHECK(f7->alpha().code == 3);

  CHECK(CodeOf([] { ExtField::Build(2, 3); }) == ErrorCode::kCompositeP);
  CHECK(CodeOf([] { ExtField::Build(9, 1); }) == ErrorCode::kCompositeP);
  CHECK(CodeOf([] { ExtField::Build(3, 0); }) == ErrorCode::kBadArgument);
  CHECK(CodeOf([] { ExtField::Build(257, 3); }) == ErrorCode::kSizeExceeded);
}

TEST_CASE("prime-field alpha is the smallest primitive root") {
  for (uint32_t p = 3; p < 400; p += 2) {
    if (!oracle::IsPrime(p)) continue;
    CAPTURE(p);
    CHECK(ExtField::Build(p, 1)->alpha().code == oracle::SmallestPrimitiveRoot(p));
  }
}

TEST_CASE("arithmetic examples") {
  auto f5 = ExtField::Build(5, 1);
  CHECK(f5->Mul({2}, {3}).code == 1);
  CHECK(f5->Pow({2}, 4).code == 1);
  CHECK(f5->Arith({2}, {3}, FieldOp::kMul).code == 1);
  CHECK(f5->Dlog({1}) == 0);
  CHECK(f5->Dlog({2}) == 1);
  CHECK(ExtField::Build(7, 1)->Dlog({6}) == 3);
  CHECK(CodeOf([&] { f5->Dlog({0}); }) == ErrorCode::kLogOfZero);
  CHECK(CodeOf([&] { f5->Inv({0}); }) == ErrorCode::kDivisionByZero);

  auto f9 = ExtField::Build(3, 2);
  CHECK(f9->Pow(f9->alpha(), 8) == f9->One());
  CHECK(f9->Pow(f9->alpha(), 4) == f9->FromInt(-1));
}

TEST_CASE("field axioms hold exhaustively in small fields") {
  for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 3u}, {7u, 2u}}) {
    auto f = ExtField::Build(p, m);
    CAPTURE(f->q());
    const uint32_t q = static_cast<uint32_t>(f->q());
    for (uint32_t a = 0; a < q; ++a) {
      CHECK(f->Add({a}, f->Neg({a})) == f->Zero());
      if (a) CHECK(f->Mul({a}, f->Inv({a})) == f->One());
      for (uint32_t b = 0; b < q; b += 3) {
        CHECK(f->Mul({a}, {b}) == f->Mul({b}, {a}));
        CHECK(f->Sub(f->Add({a}, {b}), {b}) == FieldElement{a});
        for (uint32_t c = 1; c < q; c += 5) {
          CHECK(f->Mul({a}, f->Add({b}, {c})) == f->Add(f->Mul({a}, {b}), f->Mul({a}, {c})));
        }
      }
    }
  }
}

TEST_CASE("alpha generates the multiplicative group and dlog inverts exp") {
  for (auto [p, m] : {std::pair{3u, 4u}, {5u, 3u}, {11u, 2u}, {13u, 1u}}) {
    auto f = ExtField::Build(p, m);
    std::set<uint32_t> seen;
    for (uint64_t n = 0; n < f->group_order(); ++n) {
      const FieldElement x = f->Exp(n);
      seen.insert(x.code);
      CHECK(f->Dlog(x) == n);
    }
    CHECK(seen.size() == f->group_order());
    CHECK(!seen.count(0));
  }
}

TEST_CASE("log tables of 1 + alpha^n and 1 - alpha^n") {
  auto f = ExtField::Build(5, 2);
  for (uint64_t n = 0; n < f->group_order(); ++n) {
    const FieldElement plus = f->Add(f->One(), f->Exp(n));
    const FieldElement minus = f->Sub(f->One(), f->Exp(n));
    CHECK(f->LogOnePlusPower(n) == (plus.code ? static_cast<int64_t>(f->Dlog(plus)) : -1));
    CHECK(f->LogOneMinusPower(n) == (minus.code ? static_cast<int64_t>(f->Dlog(minus)) : -1));
  }
}

TEST_CASE("trace is additive and Frobenius invariant, computed as a power sum") {
  auto f = ExtField::Build(3, 3);
  for (uint32_t a = 0; a < f->q(); ++a) {
    FieldElement sum = f->Zero();
    FieldElement x{a};
    for (uint32_t i = 0; i < f->m(); ++i) {
      sum = f->Add(sum, x);
      x = f->Pow(x, f->p());
    }
    CHECK(sum.code == f->Trace({a}));
    CHECK(f->Trace(f->Pow({a}, 3)) == f->Trace({a}));
  }
}

TEST_CASE("other primitive elements give consistent fields") {
  auto f = ExtField::Build(7, 2);
  const auto prims = f->PrimitiveElements();
  CHECK(prims.size() == 16);  // phi(48)
  auto g = f->WithAlpha(prims.back());
  CHECK(g->alpha() == prims.back());
  CHECK(g->Dlog(g->alpha()) == 1);
  CHECK(CodeOf([&] { f->WithAlpha(f->One()); }) == ErrorCode::kBadArgument);
}

TEST_CASE("residue fields") {
  auto r3 = ResidueField::Build(3);
  CHECK(r3.f() == 2);
  CHECK(r3.modulus() == BinaryPoly::FromMask(0b111));
  auto r7 = ResidueField::Build(7);
  CHECK(r7.f() == 3);
  CHECK(r7.modulus() == BinaryPoly::FromMask(0b1011));
  auto r5 = ResidueField::Build(5);
  CHECK(r5.f() == 4);
  CHECK(r5.modulus() == BinaryPoly::FromMask(0b11111));
  CHECK(CodeOf([] { ResidueField::Build(4); }) == ErrorCode::kEvenK);
  CHECK(CodeOf([] { ResidueField::Build(1); }) == ErrorCode::kKisOne);

  for (uint64_t k : {3, 5, 7, 9, 15, 21, 31, 63}) {
    auto rf = ResidueField::Build(k);
    CAPTURE(k);
    CHECK(rf.f() == oracle::OrderMod(2, k));
    CHECK(rf.Pow(rf.gamma(), k).IsOne());
    for (uint64_t d = 1; d < k; ++d) {
      if (k % d == 0) CHECK(!rf.Pow(rf.gamma(), d).IsOne());
    }
  }
}
