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

#ifndef SLCE_ARITH_HPP_
#define SLCE_ARITH_HPP_

// Small integer number-theory helpers shared by every module.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace slce {

inline bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Distinct prime factors in increasing order.
inline std::vector<uint64_t> PrimeFactors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<uint64_t> Divisors(uint64_t n) {
  std::vector<uint64_t> small, large;
  for (uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline uint64_t EulerPhi(uint64_t n) {
  uint64_t result = n;
  for (uint64_t p : PrimeFactors(n)) result = result / p * (p - 1);
  return result;
}

inline uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m > 1.
inline uint64_t MultiplicativeOrder(uint64_t a, uint64_t m) {
  uint64_t x = a % m;
  uint64_t order = 1;
  while (x != 1 % m) {
    x = MulMod(x, a, m);
    ++order;
  }
  return order;
}

// Smallest v >= 1 with base^v == -1 (mod m), if any.
inline std::optional<uint64_t> MinimalNegativeOneExponent(uint64_t base,
                                                         uint64_t m) {
  if (m <= 1 || std::gcd(base, m) != 1) return std::nullopt;
  uint64_t x = base % m;
  for (uint64_t v = 1; v <= m; ++v) {
    if ((x + 1) % m == 0) return v;
    x = MulMod(x, base, m);
  }
  return std::nullopt;
}

inline uint64_t IPow(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline uint64_t TwoAdicValuation(uint64_t n) {
  uint64_t v = 0;
  while (n != 0 && (n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  return v;
}

}  // namespace slce

#endif  // SLCE_ARITH_HPP_
