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

#ifndef SLCE_POLYBIN_BINARY_POLY_HPP_
#define SLCE_POLYBIN_BINARY_POLY_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace slce::polybin {

// Polynomial over F_2, bit i of the packed words is the coefficient of X^i.
// Storage is trimmed (no zero high word), so the zero polynomial is the
// empty vector and equal polynomials compare equal word for word.
//
// Ordering compares polynomials as unsigned integers of their coefficient
// bit strings, which is the "lexicographic" order used to pick canonical
// factors.
class BinaryPoly {
 public:
  BinaryPoly() = default;

  static BinaryPoly FromMask(uint64_t mask);
  // bits[i] != 0 sets the coefficient of X^i.
  static BinaryPoly FromBits(std::span<const uint8_t> bits);
  static BinaryPoly Monomial(size_t n);
  static BinaryPoly One() { return FromMask(1); }
  // X^n - 1 (= X^n + 1 over F_2).
  static BinaryPoly XnMinusOne(size_t n);
  // Inverse of ToHex.
  static BinaryPoly FromHex(std::string_view hex);

  // -1 for the zero polynomial.
  int64_t degree() const;
  bool IsZero() const { return words_.empty(); }
  bool IsOne() const { return words_.size() == 1 && words_[0] == 1; }
  bool Coeff(size_t i) const;
  void SetCoeff(size_t i, bool value);
  size_t Weight() const;
  const std::vector<uint64_t>& words() const { return words_; }

  // this += other * X^shift.
  void AddShifted(const BinaryPoly& other, size_t shift);
  BinaryPoly& operator+=(const BinaryPoly& other);
  BinaryPoly& operator*=(const BinaryPoly& other);

  friend BinaryPoly operator+(BinaryPoly a, const BinaryPoly& b) {
    return a += b;
  }
  friend BinaryPoly operator-(BinaryPoly a, const BinaryPoly& b) {
    return a += b;
  }
  friend BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b);
  // Throws DivisionByZero when b is zero.
  friend BinaryPoly operator/(const BinaryPoly& a, const BinaryPoly& b);
  friend BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b);

  friend bool operator==(const BinaryPoly&, const BinaryPoly&) = default;
  friend std::strong_ordering operator<=>(const BinaryPoly& a,
                                          const BinaryPoly& b);

  // f(X)^2 = f(X^2).
  BinaryPoly Square() const;
  // f(X^(2^j)) = f(X)^(2^j).
  BinaryPoly FrobeniusPower(unsigned j) const;

  // Little-endian bytes (bit i of byte j is the coefficient of X^(8j+i)),
  // two lowercase hex digits per byte. The zero polynomial is "00".
  std::string ToHex() const;
  // Human-readable, highest degree first, e.g. "X^3 + X + 1".
  std::string ToString() const;

 private:
  std::vector<uint64_t> words_;

  void Trim();
};

void DivMod(const BinaryPoly& a, const BinaryPoly& b, BinaryPoly* quotient,
            BinaryPoly* remainder);

// Monic gcd; over F_2 every nonzero polynomial is monic.
// Throws BothZero when a = b = 0.
BinaryPoly Gcd(BinaryPoly a, BinaryPoly b);

BinaryPoly MulMod(const BinaryPoly& a, const BinaryPoly& b,
                  const BinaryPoly& modulus);
BinaryPoly PowMod(BinaryPoly base, uint64_t exponent,
                  const BinaryPoly& modulus);

}  // namespace slce::polybin

#endif  // SLCE_POLYBIN_BINARY_POLY_HPP_
