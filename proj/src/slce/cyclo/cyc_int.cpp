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

#include "slce/cyclo/cyc_int.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <json.hpp>

#include "slce/arith.hpp"
#include "slce/error.hpp"

namespace slce::cyclo {
namespace {

constexpr uint64_t kConductorCap = uint64_t{1} << 20;

std::vector<int64_t> ComputeCyclotomic(uint64_t N) {
  // X^N - 1 divided exactly by Phi_d for every proper divisor d.
  std::vector<int64_t> num(N + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (uint64_t d : Divisors(N)) {
    if (d == N) continue;
    const std::vector<int64_t>& den = CyclotomicPolynomial(d);
    const size_t dd = den.size() - 1;
    std::vector<int64_t> quot(num.size() - dd, 0);
    for (size_t i = num.size(); i-- > dd;) {
      const int64_t c = num[i];
      quot[i - dd] = c;
      if (c != 0) {
        for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
      }
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<int64_t>& CyclotomicPolynomial(uint64_t N) {
  if (N == 0 || N > kConductorCap) {
    Fail(ErrorCode::kSizeExceeded, "cyclotomic index out of range: " + std::to_string(N));
  }
  static std::mutex mu;
  static std::map<uint64_t, std::vector<int64_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  std::vector<int64_t> poly = ComputeCyclotomic(N);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(N, std::move(poly)).first->second;
}

uint64_t NormalizeConductor(uint64_t N) {
  if (N == 0) Fail(ErrorCode::kBadArgument, "conductor must be positive");
  return N % 4 == 2 ? N / 2 : N;
}

CycInt::CycInt(uint64_t N) : N_(NormalizeConductor(N)), c_(EulerPhi(N_)) {}

CycInt CycInt::Integer(uint64_t N, const BigInt& value) {
  CycInt out(N);
  out.c_[0] = value;
  return out;
}

CycInt CycInt::ZetaPower(uint64_t N, int64_t e) {
  std::vector<BigInt> power(N);
  int64_t r = e % static_cast<int64_t>(N);
  if (r < 0) r += static_cast<int64_t>(N);
  power[static_cast<size_t>(r)] = 1;
  return FromPowerVector(N, std::move(power));
}

CycInt CycInt::FromExponentCounts(uint64_t N, std::span<const int64_t> counts) {
  if (counts.size() != N) Fail(ErrorCode::kBadArgument, "count vector must have length N");
  return FromPowerVector(N, std::vector<BigInt>(counts.begin(), counts.end()));
}

CycInt CycInt::FromPowerVector(uint64_t N, std::vector<BigInt> power) {
  if (N % 4 == 2) {
    const uint64_t M = N / 2;
    const uint64_t half = (M + 1) / 2;
    std::vector<BigInt> folded(M);
    for (uint64_t e = 0; e < N; ++e) {
      if (power[e] == 0) continue;
      const uint64_t target = MulMod(e, half, M);
      if (e % 2 == 0) {
        folded[target] += power[e];
      } else {
        folded[target] -= power[e];
      }
    }
    N = M;
    power = std::move(folded);
  }
  const std::vector<int64_t>& phi = CyclotomicPolynomial(N);
  const size_t d = phi.size() - 1;
  for (size_t i = power.size(); i-- > d;) {
    if (power[i] == 0) continue;
    const BigInt c = power[i];
    for (size_t j = 0; j <= d; ++j) {
      if (phi[j] != 0) power[i - d + j] -= c * phi[j];
    }
  }
  power.resize(d);
  CycInt out(N);
  out.c_ = std::move(power);
  return out;
}

std::vector<BigInt> CycInt::PowerVector(uint64_t target) const {
  std::vector<BigInt> power(target);
  const uint64_t step = target / N_;
  for (size_t i = 0; i < c_.size(); ++i) power[i * step] = c_[i];
  return power;
}

bool CycInt::IsZero() const {
  for (const BigInt& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycInt::IsInteger(BigInt* value) const {
  for (size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  if (value != nullptr) *value = c_[0];
  return true;
}

CycInt& CycInt::operator+=(const CycInt& other) {
  if (N_ != other.N_) Fail(ErrorCode::kConductorMismatch, "conductors differ");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  if (N_ != other.N_) Fail(ErrorCode::kConductorMismatch, "conductors differ");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  if (a.N_ != b.N_) Fail(ErrorCode::kConductorMismatch, "conductors differ");
  std::vector<BigInt> power(a.N_);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] != 0) power[(i + j) % a.N_] += a.c_[i] * b.c_[j];
    }
  }
  return CycInt::FromPowerVector(a.N_, std::move(power));
}

CycInt operator*(const BigInt& s, CycInt a) {
  for (BigInt& c : a.c_) c *= s;
  return a;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (BigInt& c : out.c_) c = -c;
  return out;
}

CycInt CycInt::MulZeta(int64_t e) const {
  int64_t r = e % static_cast<int64_t>(N_);
  if (r < 0) r += static_cast<int64_t>(N_);
  std::vector<BigInt> power(N_);
  for (size_t i = 0; i < c_.size(); ++i) power[(i + static_cast<uint64_t>(r)) % N_] = c_[i];
  return FromPowerVector(N_, std::move(power));
}

CycInt CycInt::Conj() const {
  std::vector<BigInt> power(N_);
  for (size_t i = 0; i < c_.size(); ++i) power[(N_ - i) % N_] = c_[i];
  return FromPowerVector(N_, std::move(power));
}

CycInt CycInt::Embed(uint64_t target) const {
  const uint64_t T = NormalizeConductor(target);
  if (T % N_ != 0) {
    Fail(ErrorCode::kConductorMismatch,
         "cannot embed conductor " + std::to_string(N_) + " into " + std::to_string(T));
  }
  if (T == N_) return *this;
  return FromPowerVector(T, PowerVector(T));
}

bool CycInt::DivisibleBy(const BigInt& d) const {
  for (const BigInt& c : c_) {
    if (c % d != 0) return false;
  }
  return true;
}

CycInt CycInt::DivExact(const BigInt& d) const {
  CycInt out = *this;
  for (BigInt& c : out.c_) {
    if (c % d != 0) Fail(ErrorCode::kBadArgument, "inexact division");
    c /= d;
  }
  return out;
}

std::complex<double> CycInt::ToComplex() const {
  std::complex<double> sum = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(N_);
    sum += c_[i].convert_to<double>() * std::polar(1.0, angle);
  }
  return sum;
}

std::string CycInt::ToJson() const {
  nlohmann::ordered_json j;
  j["conductor"] = N_;
  std::vector<std::string> coeffs;
  coeffs.reserve(c_.size());
  for (const BigInt& c : c_) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;
  return j.dump();
}

}  // namespace slce::cyclo
