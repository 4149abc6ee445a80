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

#include "slce/polybin/linear_complexity.hpp"

#include <bit>
#include <vector>

#include "slce/error.hpp"

namespace slce::polybin {

LinearComplexityResult BerlekampMasseyFinite(std::span<const uint8_t> bits) {
  const size_t n_bits = bits.size();
  // reversed[j] = bits[n_bits - 1 - j]; then s_{n-i} sits at bit
  // (n_bits - 1 - n) + i, so the discrepancy is a word-wise AND with C.
  std::vector<uint64_t> reversed(n_bits / 64 + 2, 0);
  for (size_t j = 0; j < n_bits; ++j) {
    if (bits[n_bits - 1 - j] != 0) reversed[j / 64] |= uint64_t{1} << (j % 64);
  }
  auto window_word = [&](size_t offset, size_t w) -> uint64_t {
    const size_t base = offset / 64 + w;
    const unsigned shift = offset % 64;
    const uint64_t lo = base < reversed.size() ? reversed[base] : 0;
    if (shift == 0) return lo;
    const uint64_t hi = base + 1 < reversed.size() ? reversed[base + 1] : 0;
    return (lo >> shift) | (hi << (64 - shift));
  };

  BinaryPoly c = BinaryPoly::One();
  BinaryPoly b = BinaryPoly::One();
  uint64_t L = 0;
  size_t gap = 1;
  for (size_t n = 0; n < n_bits; ++n) {
    const size_t offset = n_bits - 1 - n;
    unsigned parity = 0;
    for (size_t w = 0; w < c.words().size(); ++w) {
      parity ^= static_cast<unsigned>(std::popcount(c.words()[w] & window_word(offset, w))) & 1;
    }
    if (parity == 0) {
      ++gap;
    } else if (2 * L <= n) {
      BinaryPoly previous = c;
      c.AddShifted(b, gap);
      L = n + 1 - L;
      b = std::move(previous);
      gap = 1;
    } else {
      c.AddShifted(b, gap);
      ++gap;
    }
  }
  return {L, std::move(c), LcMethod::kBerlekampMassey};
}

LinearComplexityResult BerlekampMassey(std::span<const uint8_t> period) {
  std::vector<uint8_t> doubled(period.begin(), period.end());
  doubled.insert(doubled.end(), period.begin(), period.end());
  return BerlekampMasseyFinite(doubled);
}

LinearComplexityResult LinearComplexityViaGcd(const BinaryPoly& S, uint64_t T) {
  if (T == 0) Fail(ErrorCode::kBadArgument, "period must be positive");
  if (S.degree() >= static_cast<int64_t>(T)) {
    Fail(ErrorCode::kBadArgument, "deg S must be below the period");
  }
  const BinaryPoly xt = BinaryPoly::XnMinusOne(T);
  const BinaryPoly g = Gcd(xt, S);
  return {T - static_cast<uint64_t>(g.degree()), xt / g, LcMethod::kGcdFormula};
}

}  // namespace slce::polybin
