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

#include "slce/cyclo/gauss.hpp"

#include <cmath>
#include <numbers>

#include "slce/arith.hpp"
#include "slce/error.hpp"

namespace slce::cyclo {

std::complex<double> GaussSumNumeric(const Character& chi) {
  const auto& field = chi.field();
  const double chi_unit = 1.0 / static_cast<double>(chi.order());
  const double add_unit = 1.0 / static_cast<double>(field->p());
  std::complex<double> sum = 0;
  for (uint64_t n = 0; n < field->group_order(); ++n) {
    const double turns = static_cast<double>(chi.ExponentAtPower(n)) * chi_unit +
                         static_cast<double>(field->Trace(field->Exp(n))) * add_unit;
    sum += std::polar(1.0, 2.0 * std::numbers::pi * turns);
  }
  return sum;
}

std::complex<double> QuadraticGauss::Value() const {
  const double magnitude = std::sqrt(static_cast<double>(q)) * sign;
  return imaginary ? std::complex<double>(0, magnitude)
                   : std::complex<double>(magnitude, 0);
}

std::optional<BigInt> QuadraticGauss::AsInteger(uint32_t p, uint32_t m) const {
  if (m % 2 != 0 || imaginary) return std::nullopt;
  BigInt value = boost::multiprecision::pow(BigInt(p), m / 2);
  return sign < 0 ? BigInt(-value) : value;
}

std::string QuadraticGauss::ToString() const {
  return std::string(sign < 0 ? "-" : "+") + (imaginary ? "i*" : "") +
         "sqrt(" + std::to_string(q) + ")";
}

QuadraticGauss QuadraticGaussClosed(uint32_t p, uint32_t m) {
  if (p % 2 == 0 || !IsPrime(p)) Fail(ErrorCode::kCompositeP, "p must be an odd prime");
  if (m == 0) Fail(ErrorCode::kBadArgument, "m must be positive");
  QuadraticGauss g;
  g.q = IPow(p, m);
  g.sign = (m - 1) % 2 == 0 ? 1 : -1;
  if (p % 4 == 3) {
    // i^m: 1, i, -1, -i.
    switch (m % 4) {
      case 1: g.imaginary = true; break;
      case 2: g.sign = -g.sign; break;
      case 3: g.imaginary = true; g.sign = -g.sign; break;
      default: break;
    }
  }
  return g;
}

SemiprimitiveGauss SemiprimitiveGaussClosed(uint32_t p, uint32_t m, uint64_t N,
                                            uint64_t cap) {
  if (N <= 2) Fail(ErrorCode::kNotSemiprimitive, "character order must exceed 2");
  const std::optional<uint64_t> v = MinimalNegativeOneExponent(p, N);
  if (!v || m % (2 * *v) != 0) {
    Fail(ErrorCode::kNotSemiprimitive,
         "no v with p^v = -1 mod N and m = 2vw");
  }
  SemiprimitiveGauss out;
  out.v = *v;
  out.w = m / (2 * *v);
  const uint64_t pv_plus_one_over_n = (IPow(p, out.v) + 1) / N;
  const uint64_t exponent = out.w - 1 + uint64_t{p} * out.w * pv_plus_one_over_n;
  out.formula_sign = exponent % 2 == 0 ? 1 : -1;

  auto field = ff::ExtField::Build(p, m, cap);
  out.numeric = GaussSumNumeric(Character::Eta(field, 1, N));
  out.numeric_sign = out.numeric.real() >= 0 ? 1 : -1;
  const double magnitude = std::pow(static_cast<double>(p), static_cast<double>(out.v * out.w));
  const bool real_integer =
      std::abs(out.numeric.imag()) <= 1e-6 * magnitude &&
      std::abs(std::abs(out.numeric.real()) - magnitude) <= 1e-6 * magnitude;
  out.formula_mismatch = !real_integer || out.formula_sign != out.numeric_sign;
  out.value = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(out.v * out.w));
  if (out.numeric_sign < 0) out.value = -out.value;
  return out;
}

}  // namespace slce::cyclo
