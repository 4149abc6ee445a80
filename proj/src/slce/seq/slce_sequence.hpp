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

#ifndef SLCE_SEQ_SLCE_SEQUENCE_HPP_
#define SLCE_SEQ_SLCE_SEQUENCE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "slce/ff/ext_field.hpp"
#include "slce/polybin/binary_poly.hpp"

namespace slce::seq {

// One period of a d-ary SLCE sequence: s_n = i when alpha^n + 1 lies in the
// cyclotomic coset alpha^i <alpha^d>, and 0 when alpha^n + 1 = 0.
class SlceSequence {
 public:
  // Throws BadAlphabet unless d is a prime dividing q - 1.
  static SlceSequence Generate(std::shared_ptr<const ff::ExtField> field,
                               uint32_t d);

  // Wraps explicit terms (no field attached); used for hypothetical inputs.
  SlceSequence(uint32_t d, std::vector<uint32_t> terms);

  const std::shared_ptr<const ff::ExtField>& field() const { return field_; }
  uint32_t d() const { return d_; }
  const std::vector<uint32_t>& terms() const { return terms_; }
  uint64_t period() const { return terms_.size(); }
  // T = 2^u * T' with T' odd.
  uint64_t u() const { return u_; }
  uint64_t t_prime() const { return t_prime_; }

  // Terms as 0/1 bytes; throws NotBinary for d != 2.
  std::vector<uint8_t> Bits() const;

 private:
  std::shared_ptr<const ff::ExtField> field_;
  uint32_t d_;
  std::vector<uint32_t> terms_;
  uint64_t u_ = 0;
  uint64_t t_prime_ = 0;
};

// S(X) = sum_n s_n X^n. Throws NotBinary.
polybin::BinaryPoly CharacteristicPoly(const SlceSequence& s);

// C(tau) = sum_n (-1)^(s_{n+tau} - s_n) with cyclic indexing.
int64_t Autocorrelation(const SlceSequence& s, uint64_t tau);

struct BalanceReport {
  std::map<uint32_t, uint64_t> counts;
  uint64_t ones = 0;
  uint64_t half_period = 0;
};

BalanceReport Balance(const SlceSequence& s);

// {"p", "m", "d", "alpha_dlog_basis": "canonical", "terms": [...]}.
std::string ToJson(const SlceSequence& s);
// "1100" style, binary sequences only.
std::string ToBitString(const SlceSequence& s);

}  // namespace slce::seq

#endif  // SLCE_SEQ_SLCE_SEQUENCE_HPP_
