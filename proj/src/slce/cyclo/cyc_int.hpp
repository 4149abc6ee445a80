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

#ifndef SLCE_CYCLO_CYC_INT_HPP_
#define SLCE_CYCLO_CYC_INT_HPP_

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace slce::cyclo {

using BigInt = boost::multiprecision::cpp_int;

// Exact integer coefficients of Phi_N, constant term first. Cached.
const std::vector<int64_t>& CyclotomicPolynomial(uint64_t N);

// Conductor of Q(zeta_N): N/2 when N = 2 mod 4, else N.
uint64_t NormalizeConductor(uint64_t N);

// An element sum_i c_i zeta_N^i of Z[zeta_N] in the power basis of length
// phi(N). Conductors are kept normalized (never 2 mod 4), using
// zeta_{2M} = -zeta_M^((M+1)/2) for odd M, so equal algebraic integers have
// equal representations.
class CycInt {
 public:
  // Zero in Z[zeta_1] = Z.
  CycInt() : CycInt(1) {}
  explicit CycInt(uint64_t N);

  static CycInt Integer(uint64_t N, const BigInt& value);
  // zeta_N^e (e taken mod N).
  static CycInt ZetaPower(uint64_t N, int64_t e);
  // sum_e counts[e] zeta_N^e, counts.size() == N.
  static CycInt FromExponentCounts(uint64_t N, std::span<const int64_t> counts);

  uint64_t conductor() const { return N_; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool IsZero() const;
  // True when the element is a rational integer; stores it in *value.
  bool IsInteger(BigInt* value = nullptr) const;

  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend CycInt operator*(const BigInt& s, CycInt a);
  CycInt operator-() const;
  friend bool operator==(const CycInt&, const CycInt&) = default;

  // Times zeta_N^e.
  CycInt MulZeta(int64_t e) const;
  // zeta_N -> zeta_N^-1.
  CycInt Conj() const;
  // zeta_N -> zeta_{N'}^(N'/N); throws ConductorMismatch unless N | N'.
  CycInt Embed(uint64_t target) const;
  // Whether every coefficient is divisible by d.
  bool DivisibleBy(const BigInt& d) const;
  // Exact division of every coefficient; requires DivisibleBy(d).
  CycInt DivExact(const BigInt& d) const;

  std::complex<double> ToComplex() const;
  // {"conductor": N, "coeffs": ["..", ...]} with decimal strings.
  std::string ToJson() const;

 private:
  uint64_t N_;
  std::vector<BigInt> c_;

  // Builds from a length-N power vector (exponents 0..N-1).
  static CycInt FromPowerVector(uint64_t N, std::vector<BigInt> power);
  std::vector<BigInt> PowerVector(uint64_t target) const;
};

}  // namespace slce::cyclo

#endif  // SLCE_CYCLO_CYC_INT_HPP_
