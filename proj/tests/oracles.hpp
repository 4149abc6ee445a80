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

// Deliberately naive reference implementations. None of these call into the
// library, so agreement with it is evidence rather than tautology.

#ifndef SLCE_TESTS_ORACLES_HPP_
#define SLCE_TESTS_ORACLES_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using Bits = std::vector<uint8_t>;  // coefficient i at index i
using IntPoly = std::vector<int64_t>;

inline uint64_t PowMod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  for (; e; e >>= 1, b = b * b % m) {
    if (e & 1) r = r * b % m;
  }
  return r;
}

inline bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline uint64_t OrderMod(uint64_t a, uint64_t m) {
  uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = x * a % m;
    ++k;
  }
  return k;
}

inline uint64_t SmallestPrimitiveRoot(uint64_t p) {
  for (uint64_t g = 2;; ++g) {
    if (OrderMod(g, p) == p - 1) return g;
  }
}

// Binary SLCE sequence over the prime field F_p by Euler's criterion.
inline Bits SlceBitsPrime(uint64_t p) {
  const uint64_t g = SmallestPrimitiveRoot(p);
  Bits s(p - 1);
  uint64_t x = 1;
  for (uint64_t n = 0; n + 1 < p; ++n, x = x * g % p) {
    const uint64_t y = (x + 1) % p;
    s[n] = y != 0 && PowMod(y, (p - 1) / 2, p) == p - 1;
  }
  return s;
}

inline void Trim(Bits& a) {
  while (!a.empty() && !a.back()) a.pop_back();
}

inline int64_t Degree(Bits a) {
  Trim(a);
  return static_cast<int64_t>(a.size()) - 1;
}

inline Bits Mod(Bits a, Bits b) {
  Trim(a);
  Trim(b);
  while (a.size() >= b.size() && !a.empty()) {
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] ^= b[i];
    Trim(a);
  }
  return a;
}

inline Bits Gcd(Bits a, Bits b) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Bits r = Mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Bits Mul(const Bits& a, const Bits& b) {
  if (a.empty() || b.empty()) return {};
  Bits out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
  }
  Trim(out);
  return out;
}

inline Bits XnMinusOne(size_t n) {
  Bits out(n + 1, 0);
  out[0] = out[n] = 1;
  return out;
}

// L = T - deg gcd(X^T - 1, S).
inline uint64_t LinearComplexity(const Bits& period) {
  const Bits g = Gcd(XnMinusOne(period.size()), period);
  return period.size() - static_cast<uint64_t>(Degree(g));
}

// Shortest LFSR by exhaustive search over connection polynomials, for short
// sequences only. The sequence is read as two periods.
inline uint64_t LinearComplexityExhaustive(const Bits& period) {
  const size_t T = period.size();
  Bits s(2 * T);
  for (size_t i = 0; i < 2 * T; ++i) s[i] = period[i % T];
  for (size_t L = 0; L <= T; ++L) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << L); ++mask) {
      bool ok = true;
      for (size_t n = L; n < 2 * T && ok; ++n) {
        uint8_t acc = 0;
        for (size_t j = 1; j <= L; ++j) acc ^= ((mask >> (j - 1)) & 1) & s[n - j];
        ok = acc == s[n];
      }
      if (ok) return L;
    }
  }
  return T;
}

// Pascal's triangle mod 2.
inline std::vector<Bits> PascalMod2(size_t n_max) {
  std::vector<Bits> rows(n_max + 1);
  for (size_t n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, 1);
    for (size_t t = 1; t < n; ++t) rows[n][t] = rows[n - 1][t - 1] ^ rows[n - 1][t];
  }
  return rows;
}

inline int Mobius(uint64_t n) {
  int sign = 1;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

inline IntPoly MulInt(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic polynomial.
inline IntPoly DivInt(IntPoly a, const IntPoly& b) {
  IntPoly q(a.size() - b.size() + 1, 0);
  for (size_t i = q.size(); i-- > 0;) {
    q[i] = a[i + b.size() - 1];
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
  }
  return q;
}

// Phi_N = prod_{d | N} (X^d - 1)^{mu(N/d)}.
inline IntPoly Cyclotomic(uint64_t N) {
  IntPoly num{1}, den{1};
  for (uint64_t d = 1; d <= N; ++d) {
    if (N % d) continue;
    IntPoly f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    const int mu = Mobius(N / d);
    if (mu == 1) num = MulInt(num, f);
    if (mu == -1) den = MulInt(den, f);
  }
  return DivInt(num, den);
}

// Characters of F_p^* as eta_{a/(p-1)}: g^n -> exp(2 pi i a n / (p-1)).
struct PrimeCharacters {
  uint64_t p;
  uint64_t g;
  std::vector<uint64_t> log;  // log[x] for x in 1..p-1

  explicit PrimeCharacters(uint64_t prime) : p(prime), g(SmallestPrimitiveRoot(prime)), log(prime, 0) {
    uint64_t x = 1;
    for (uint64_t n = 0; n + 1 < p; ++n, x = x * g % p) log[x] = n;
  }

  std::complex<double> Value(uint64_t a, uint64_t x) const {
    x %= p;
    if (x == 0) return 0.0;
    const double angle = 2 * std::numbers::pi * static_cast<double>((a * log[x]) % (p - 1)) /
                         static_cast<double>(p - 1);
    return std::polar(1.0, angle);
  }

  std::complex<double> Jacobi(uint64_t a1, uint64_t a2) const {
    std::complex<double> sum = 0.0;
    for (uint64_t x = 0; x < p; ++x) sum += Value(a1, x) * Value(a2, (1 + p - x) % p);
    return sum;
  }

  std::complex<double> Gauss(uint64_t a) const {
    std::complex<double> sum = 0.0;
    for (uint64_t x = 1; x < p; ++x) {
      sum += Value(a, x) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(x) /
                                               static_cast<double>(p));
    }
    return sum;
  }
};

inline double RelErr(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace oracle

#endif  // SLCE_TESTS_ORACLES_HPP_
