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

#include <random>

#include "oracles.hpp"
#include "slce/error.hpp"
#include "slce/ff/residue_field.hpp"
#include "slce/polybin/binary_poly.hpp"
#include "slce/polybin/linear_complexity.hpp"
#include "slce/polybin/poly_algos.hpp"

using namespace slce::polybin;
using slce::ErrorCode;
using slce::ff::ResidueField;

namespace {

BinaryPoly FromOracle(const oracle::Bits& bits) { return BinaryPoly::FromBits(bits); }

oracle::Bits ToOracle(const BinaryPoly& p) {
  oracle::Bits out(static_cast<size_t>(p.degree() + 1));
  for (size_t i = 0; i < out.size(); ++i) out[i] = p.Coeff(i);
  return out;
}

BinaryPoly RandomPoly(std::mt19937_64& rng, size_t max_degree) {
  std::uniform_int_distribution<size_t> deg(0, max_degree);
  oracle::Bits bits(deg(rng) + 1);
  for (auto& b : bits) b = rng() & 1;
  return FromOracle(bits);
}

// Multiplicity of beta by repeated synthetic division by (X - beta) with
// coefficients in the residue field.
uint64_t MultiplicityBySyntheticDivision(const BinaryPoly& f, const BinaryPoly& beta,
                                         const ResidueField& rf) {
  std::vector<BinaryPoly> c;
  for (int64_t i = 0; i <= f.degree(); ++i) c.push_back(f.Coeff(i) ? BinaryPoly::One() : BinaryPoly());
  uint64_t mult = 0;
  while (!c.empty()) {
    std::vector<BinaryPoly> quotient(c.size() - 1);
    BinaryPoly carry;
    for (size_t i = c.size(); i-- > 0;) {
      BinaryPoly value = c[i] + carry;
      if (i == 0) {
        if (!rf.Reduce(value).IsZero()) return mult;
      } else {
        quotient[i - 1] = rf.Reduce(value);
        carry = rf.Mul(quotient[i - 1], beta);
      }
    }
    c = std::move(quotient);
    ++mult;
  }
  return mult;
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

}  // namespace

TEST_CASE("polynomial basics and encodings") {
  const BinaryPoly f = BinaryPoly::FromMask(0b1011);
  CHECK(f.degree() == 3);
  CHECK(f.ToString() == "X^3 + X + 1");
  CHECK(BinaryPoly().degree() == -1);
  CHECK(BinaryPoly().ToHex() == "00");
  CHECK(BinaryPoly::FromHex(f.ToHex()) == f);
  const BinaryPoly big = BinaryPoly::Monomial(200) + BinaryPoly::Monomial(64) + BinaryPoly::One();
  CHECK(BinaryPoly::FromHex(big.ToHex()) == big);
  CHECK(big.Weight() == 3);
  CHECK(BinaryPoly::XnMinusOne(4) == BinaryPoly::FromMask(0b10001));
  CHECK(CodeOf([&] { return f / BinaryPoly(); }) == ErrorCode::kDivisionByZero);
}

TEST_CASE("arithmetic agrees with the naive oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const BinaryPoly a = RandomPoly(rng, 150);
    BinaryPoly b = RandomPoly(rng, 90);
    if (b.IsZero()) b = BinaryPoly::One();
    CHECK(ToOracle(a * b) == oracle::Mul(ToOracle(a), ToOracle(b)));
    CHECK(ToOracle(a % b) == oracle::Mod(ToOracle(a), ToOracle(b)));
    CHECK((a / b) * b + a % b == a);
    CHECK(a.Square() == a * a);
    if (!a.IsZero()) CHECK(ToOracle(Gcd(a, b)) == oracle::Gcd(ToOracle(a), ToOracle(b)));
  }
}

TEST_CASE("gcd examples") {
  CHECK(Gcd(BinaryPoly::FromMask(0b101), BinaryPoly::FromMask(0b11)) == BinaryPoly::FromMask(0b11));
  CHECK(Gcd(BinaryPoly::XnMinusOne(6), BinaryPoly::FromMask(0b110100)).IsOne());
  const BinaryPoly f = BinaryPoly::FromMask(0b1101);
  CHECK(Gcd(f, BinaryPoly()) == f);
  CHECK(CodeOf([] { Gcd(BinaryPoly(), BinaryPoly()); }) == ErrorCode::kBothZero);
}

TEST_CASE("binomial parity matches Pascal's triangle up to 1024") {
  const auto rows = oracle::PascalMod2(1024);
  for (uint64_t n = 0; n <= 1024; ++n) {
    for (uint64_t t = 0; t <= n; ++t) {
      if (BinomMod2(n, t) != static_cast<bool>(rows[n][t])) {
        FAIL("mismatch at n=" << n << " t=" << t);
      }
    }
  }
  CHECK(BinomMod2(5, 1));
  CHECK(!BinomMod2(4, 2));
  CHECK(BinomMod2(6, 2));
}

TEST_CASE("Hasse derivatives") {
  CHECK(HasseDerivative(BinaryPoly::Monomial(3), 2) == BinaryPoly::Monomial(1));
  CHECK(HasseDerivative(BinaryPoly::Monomial(4), 1).IsZero());
  std::mt19937_64 rng(11);
  const auto rows = oracle::PascalMod2(200);
  for (int trial = 0; trial < 40; ++trial) {
    const BinaryPoly f = RandomPoly(rng, 120);
    CHECK(HasseDerivative(f, 0) == f);
    for (uint64_t i = 0; i < 6; ++i) {
      for (uint64_t j = 0; j < 6; ++j) {
        // D_i D_j = C(i+j, i) D_{i+j}.
        const BinaryPoly lhs = HasseDerivative(HasseDerivative(f, j), i);
        const BinaryPoly rhs = rows[i + j][i] ? HasseDerivative(f, i + j) : BinaryPoly();
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("bit length and index sets") {
  CHECK(BitLengthH(0) == 0);
  CHECK(BitLengthH(1) == 1);
  CHECK(BitLengthH(2) == 2);
  CHECK(BitLengthH(3) == 2);
  CHECK(IndexSet(0) == std::vector<uint64_t>{0});
  CHECK(IndexSet(1) == std::vector<uint64_t>{1});
  CHECK(IndexSet(2) == std::vector<uint64_t>{2, 3});
  for (uint64_t t = 0; t < 64; ++t) {
    for (uint64_t a : IndexSet(t)) {
      CHECK((a & t) == t);
      CHECK(a < (uint64_t{1} << BitLengthH(t)));
    }
  }
}

TEST_CASE("cyclotomic factorization mod 2") {
  CHECK(FactorPhiMod2(3) == std::vector{BinaryPoly::FromMask(0b111)});
  CHECK(FactorPhiMod2(7) == std::vector{BinaryPoly::FromMask(0b1011), BinaryPoly::FromMask(0b1101)});
  const auto f9 = FactorPhiMod2(9);
  REQUIRE(f9.size() == 1);
  CHECK(f9[0].degree() == 6);
  CHECK(CodeOf([] { FactorPhiMod2(6); }) == ErrorCode::kEvenK);

  for (uint64_t k = 3; k < 140; k += 2) {
    CAPTURE(k);
    const auto factors = FactorPhiMod2(k);
    const uint64_t f = oracle::OrderMod(2, k);
    BinaryPoly product = BinaryPoly::One();
    for (const auto& g : factors) {
      CHECK(static_cast<uint64_t>(g.degree()) == f);
      product *= g;
    }
    // Product equals the integer cyclotomic polynomial reduced mod 2.
    const auto phi = oracle::Cyclotomic(k);
    oracle::Bits phi2(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) phi2[i] = static_cast<uint8_t>(((phi[i] % 2) + 2) % 2);
    CHECK(ToOracle(product) == phi2);
    CHECK(std::is_sorted(factors.begin(), factors.end()));
  }
}

TEST_CASE("root multiplicity") {
  auto r1 = ResidueField::ForOrder(1);
  CHECK(RootMultiplicity(BinaryPoly::FromMask(0b101), BinaryPoly::One(), r1) == 2);
  auto r3 = ResidueField::Build(3);
  CHECK(RootMultiplicity(BinaryPoly::FromMask(0b110100), r3.gamma(), r3) == 0);
  CHECK(CodeOf([&] { RootMultiplicity(BinaryPoly(), r3.gamma(), r3); }) == ErrorCode::kZeroPolynomial);

  // X^T - 1 with T = 2^u T' has every T'-th root with multiplicity 2^u.
  for (auto [k, u] : {std::pair{3u, 2u}, {5u, 3u}, {7u, 1u}, {9u, 2u}}) {
    auto rf = ResidueField::Build(k);
    const BinaryPoly x = BinaryPoly::XnMinusOne((size_t{1} << u) * k);
    for (uint64_t e = 0; e < k; ++e) CHECK(RootMultiplicity(x, rf.GammaPower(e), rf) == (1u << u));
  }

  // Agreement with synthetic division and additivity over products.
  std::mt19937_64 rng(3);
  auto rf = ResidueField::Build(7);
  const BinaryPoly g = BinaryPoly::FromMask(0b1011);
  for (int trial = 0; trial < 60; ++trial) {
    BinaryPoly a = RandomPoly(rng, 40);
    BinaryPoly b = RandomPoly(rng, 40);
    if (a.IsZero()) a = BinaryPoly::One();
    if (b.IsZero()) b = BinaryPoly::One();
    a *= g;  // guarantee some roots
    for (uint64_t e = 1; e < 7; ++e) {
      const BinaryPoly beta = rf.GammaPower(e);
      const uint64_t ma = RootMultiplicity(a, beta, rf);
      CHECK(ma == MultiplicityBySyntheticDivision(a, beta, rf));
      CHECK(RootMultiplicity(a * b, beta, rf) == ma + RootMultiplicity(b, beta, rf));
    }
  }
}

TEST_CASE("linear complexity examples") {
  const std::vector<uint8_t> zeros(4, 0), ones(4, 1), q7{0, 0, 1, 0, 1, 1};
  auto r0 = BerlekampMassey(zeros);
  CHECK(r0.L == 0);
  CHECK(r0.minimal_poly.IsOne());
  auto r1 = BerlekampMassey(ones);
  CHECK(r1.L == 1);
  CHECK(r1.minimal_poly == BinaryPoly::FromMask(0b11));
  CHECK(BerlekampMassey(q7).L == 6);
  CHECK(LinearComplexityViaGcd(BinaryPoly(), 4).L == 0);
  CHECK(LinearComplexityViaGcd(BinaryPoly::FromMask(0b110100), 6).L == 6);
  CHECK(LinearComplexityViaGcd(BinaryPoly::FromMask(0b11), 4).L == 3);
}

TEST_CASE("Berlekamp-Massey agrees with the gcd route and exhaustive search") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const size_t T = 1 + rng() % 14;
    std::vector<uint8_t> bits(T);
    for (auto& b : bits) b = rng() & 1;
    const auto bm = BerlekampMassey(bits);
    const auto gcd = LinearComplexityViaGcd(BinaryPoly::FromBits(bits), T);
    CHECK(bm.L == gcd.L);
    CHECK(bm.minimal_poly == gcd.minimal_poly);
    CHECK(bm.L == oracle::LinearComplexity(bits));
    CHECK(bm.L == oracle::LinearComplexityExhaustive(bits));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const size_t T = 100 + rng() % 400;
    std::vector<uint8_t> bits(T);
    for (auto& b : bits) b = rng() & 1;
    CHECK(BerlekampMassey(bits).L == oracle::LinearComplexity(bits));
  }
}
