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

#include "slce/polybin/binary_poly.hpp"

#include <bit>

#include "slce/error.hpp"

namespace slce::polybin {

BinaryPoly BinaryPoly::FromMask(uint64_t mask) {
  BinaryPoly out;
  if (mask != 0) out.words_.push_back(mask);
  return out;
}

BinaryPoly BinaryPoly::FromBits(std::span<const uint8_t> bits) {
  BinaryPoly out;
  out.words_.assign((bits.size() + 63) / 64, 0);
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) out.words_[i / 64] |= uint64_t{1} << (i % 64);
  }
  out.Trim();
  return out;
}

BinaryPoly BinaryPoly::Monomial(size_t n) {
  BinaryPoly out;
  out.SetCoeff(n, true);
  return out;
}

BinaryPoly BinaryPoly::XnMinusOne(size_t n) {
  BinaryPoly out = Monomial(n);
  out.SetCoeff(0, !out.Coeff(0));
  return out;
}

int64_t BinaryPoly::degree() const {
  if (words_.empty()) return -1;
  return static_cast<int64_t>(64 * (words_.size() - 1) + 63 -
                              std::countl_zero(words_.back()));
}

bool BinaryPoly::Coeff(size_t i) const {
  const size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1) != 0;
}

void BinaryPoly::SetCoeff(size_t i, bool value) {
  const size_t w = i / 64;
  if (w >= words_.size()) {
    if (!value) return;
    words_.resize(w + 1, 0);
  }
  const uint64_t bit = uint64_t{1} << (i % 64);
  if (value) {
    words_[w] |= bit;
  } else {
    words_[w] &= ~bit;
    Trim();
  }
}

size_t BinaryPoly::Weight() const {
  size_t total = 0;
  for (uint64_t w : words_) total += static_cast<size_t>(std::popcount(w));
  return total;
}

void BinaryPoly::Trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void BinaryPoly::AddShifted(const BinaryPoly& other, size_t shift) {
  if (other.words_.empty()) return;
  const size_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  const size_t needed = other.words_.size() + word_shift + (bit_shift ? 1 : 0);
  if (words_.size() < needed) words_.resize(needed, 0);
  if (bit_shift == 0) {
    for (size_t i = 0; i < other.words_.size(); ++i) {
      words_[i + word_shift] ^= other.words_[i];
    }
  } else {
    for (size_t i = 0; i < other.words_.size(); ++i) {
      words_[i + word_shift] ^= other.words_[i] << bit_shift;
      words_[i + word_shift + 1] ^= other.words_[i] >> (64 - bit_shift);
    }
  }
  Trim();
}

BinaryPoly& BinaryPoly::operator+=(const BinaryPoly& other) {
  AddShifted(other, 0);
  return *this;
}

BinaryPoly operator*(const BinaryPoly& a, const BinaryPoly& b) {
  const BinaryPoly& sparse = a.Weight() <= b.Weight() ? a : b;
  const BinaryPoly& dense = &sparse == &a ? b : a;
  BinaryPoly out;
  if (sparse.IsZero()) return out;
  out.words_.reserve(a.words_.size() + b.words_.size());
  for (size_t w = 0; w < sparse.words_.size(); ++w) {
    uint64_t bits = sparse.words_[w];
    while (bits != 0) {
      const unsigned i = static_cast<unsigned>(std::countr_zero(bits));
      out.AddShifted(dense, 64 * w + i);
      bits &= bits - 1;
    }
  }
  return out;
}

BinaryPoly& BinaryPoly::operator*=(const BinaryPoly& other) {
  *this = *this * other;
  return *this;
}

void DivMod(const BinaryPoly& a, const BinaryPoly& b, BinaryPoly* quotient,
            BinaryPoly* remainder) {
  if (b.IsZero()) Fail(ErrorCode::kDivisionByZero, "polynomial division by zero");
  BinaryPoly r = a;
  BinaryPoly q;
  const int64_t db = b.degree();
  for (int64_t dr = r.degree(); dr >= db; dr = r.degree()) {
    const size_t shift = static_cast<size_t>(dr - db);
    if (quotient != nullptr) q.SetCoeff(shift, true);
    r.AddShifted(b, shift);
  }
  if (quotient != nullptr) *quotient = std::move(q);
  if (remainder != nullptr) *remainder = std::move(r);
}

BinaryPoly operator/(const BinaryPoly& a, const BinaryPoly& b) {
  BinaryPoly q;
  DivMod(a, b, &q, nullptr);
  return q;
}

BinaryPoly operator%(const BinaryPoly& a, const BinaryPoly& b) {
  BinaryPoly r;
  DivMod(a, b, nullptr, &r);
  return r;
}

std::strong_ordering operator<=>(const BinaryPoly& a, const BinaryPoly& b) {
  if (a.words_.size() != b.words_.size()) {
    return a.words_.size() <=> b.words_.size();
  }
  for (size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
  }
  return std::strong_ordering::equal;
}

BinaryPoly BinaryPoly::Square() const { return FrobeniusPower(1); }

BinaryPoly BinaryPoly::FrobeniusPower(unsigned j) const {
  BinaryPoly out;
  const size_t stride = size_t{1} << j;
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t bits = words_[w];
    while (bits != 0) {
      const size_t i = 64 * w + static_cast<size_t>(std::countr_zero(bits));
      out.SetCoeff(i * stride, true);
      bits &= bits - 1;
    }
  }
  return out;
}

std::string BinaryPoly::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (IsZero()) return "00";
  const size_t bytes = static_cast<size_t>(degree()) / 8 + 1;
  std::string out;
  out.reserve(2 * bytes);
  for (size_t j = 0; j < bytes; ++j) {
    const unsigned byte = (words_[j / 8] >> (8 * (j % 8))) & 0xff;
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xf]);
  }
  return out;
}

BinaryPoly BinaryPoly::FromHex(std::string_view hex) {
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    Fail(ErrorCode::kBadArgument, "invalid hex digit");
  };
  if (hex.size() % 2 != 0) Fail(ErrorCode::kBadArgument, "odd-length hex string");
  BinaryPoly out;
  out.words_.assign((hex.size() / 2 + 7) / 8, 0);
  for (size_t j = 0; j < hex.size() / 2; ++j) {
    const uint64_t byte = nibble(hex[2 * j]) << 4 | nibble(hex[2 * j + 1]);
    out.words_[j / 8] |= byte << (8 * (j % 8));
  }
  out.Trim();
  return out;
}

std::string BinaryPoly::ToString() const {
  if (IsZero()) return "0";
  std::string out;
  for (int64_t i = degree(); i >= 0; --i) {
    if (!Coeff(static_cast<size_t>(i))) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "X";
    } else {
      out += "X^" + std::to_string(i);
    }
  }
  return out;
}

BinaryPoly Gcd(BinaryPoly a, BinaryPoly b) {
  if (a.IsZero() && b.IsZero()) Fail(ErrorCode::kBothZero, "gcd(0, 0) is undefined");
  while (!b.IsZero()) {
    BinaryPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BinaryPoly MulMod(const BinaryPoly& a, const BinaryPoly& b,
                  const BinaryPoly& modulus) {
  return (a * b) % modulus;
}

BinaryPoly PowMod(BinaryPoly base, uint64_t exponent,
                  const BinaryPoly& modulus) {
  BinaryPoly result = BinaryPoly::One() % modulus;
  base = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = MulMod(result, base, modulus);
    base = MulMod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

}  // namespace slce::polybin
