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

#ifndef SLCE_FF_EXT_FIELD_HPP_
#define SLCE_FF_EXT_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace slce::ff {

// Default cap on q; dlog tables and every T-length sum are O(q).
inline constexpr uint64_t kDefaultFieldCap = uint64_t{1} << 16;

// An element of F_{p^m} in the polynomial basis. `code` packs the
// coefficients as base-p digits, constant term least significant, so
// 0 is zero and 1 is one in every field.
struct FieldElement {
  uint32_t code = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

enum class FieldOp { kAdd, kMul, kInv, kPow, kNeg };

// F_q with q = p^m for an odd prime p.
//
// The modulus is the smallest monic irreducible of degree m when the
// non-leading coefficients are read as a base-p number (constant term
// least significant); alpha is the smallest primitive element in the same
// order. Both choices are deterministic so that every downstream table is
// reproducible. Instances are immutable and safe to share across threads.
class ExtField {
 public:
  static std::shared_ptr<const ExtField> Build(uint32_t p, uint32_t m,
                                               uint64_t cap = kDefaultFieldCap);

  // The same field with a different primitive element.
  std::shared_ptr<const ExtField> WithAlpha(FieldElement alpha) const;

  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }
  uint64_t q() const { return q_; }
  // Order of the multiplicative group, T = q - 1.
  uint64_t group_order() const { return q_ - 1; }
  // Coefficients, constant term first, length m + 1 (monic).
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  FieldElement alpha() const { return alpha_; }

  FieldElement Zero() const { return {0}; }
  FieldElement One() const { return {1}; }
  FieldElement FromInt(int64_t value) const;
  FieldElement FromCoeffs(std::span<const uint32_t> coeffs) const;
  std::vector<uint32_t> Coeffs(FieldElement x) const;
  bool Contains(FieldElement x) const { return x.code < q_; }

  FieldElement Add(FieldElement a, FieldElement b) const;
  FieldElement Sub(FieldElement a, FieldElement b) const;
  FieldElement Neg(FieldElement a) const;
  FieldElement Mul(FieldElement a, FieldElement b) const;
  FieldElement Inv(FieldElement a) const;
  // Negative exponents are allowed for nonzero bases.
  FieldElement Pow(FieldElement a, int64_t n) const;
  FieldElement Arith(FieldElement a, FieldElement b, FieldOp op,
                     int64_t exponent = 0) const;

  // alpha^n.
  FieldElement Exp(uint64_t n) const { return {exp_[n % (q_ - 1)]}; }
  // n in [0, q-2] with alpha^n = x.
  uint64_t Dlog(FieldElement x) const;
  // dlog(1 + alpha^n), or -1 when 1 + alpha^n = 0.
  int64_t LogOnePlusPower(uint64_t n) const;
  // dlog(1 - alpha^n), or -1 when alpha^n = 1.
  int64_t LogOneMinusPower(uint64_t n) const;
  // Absolute trace F_q -> F_p.
  uint32_t Trace(FieldElement x) const { return trace_[x.code]; }

  std::vector<FieldElement> PrimitiveElements() const;

 private:
  ExtField() = default;

  uint32_t p_ = 0;
  uint32_t m_ = 0;
  uint64_t q_ = 0;
  std::vector<uint32_t> modulus_;
  FieldElement alpha_;
  std::vector<uint32_t> exp_;  // length q - 1
  std::vector<int32_t> log_;   // length q, log_[0] = -1
  std::vector<int32_t> log_one_plus_;   // dlog(1 + alpha^n)
  std::vector<int32_t> log_one_minus_;  // dlog(1 - alpha^n)
  std::vector<uint32_t> trace_;
  std::vector<uint32_t> place_;  // p^i

  uint32_t Digit(uint32_t code, uint32_t i) const {
    return code / place_[i] % p_;
  }
  void BuildLogTables();
};

}  // namespace slce::ff

#endif  // SLCE_FF_EXT_FIELD_HPP_
