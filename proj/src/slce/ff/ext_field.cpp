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

#include "slce/ff/ext_field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "slce/arith.hpp"
#include "slce/error.hpp"

namespace slce::ff {
namespace {

using Poly = std::vector<uint32_t>;  // constant term first

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial b over F_p.
Poly RemMonic(Poly a, const Poly& b, uint32_t p) {
  const size_t db = b.size() - 1;
  Trim(a);
  while (a.size() > db) {
    const uint32_t lead = a.back();
    const size_t shift = a.size() - 1 - db;
    for (size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<uint32_t>(
          (a[shift + i] + static_cast<uint64_t>(p - lead) * b[i]) % p);
    }
    Trim(a);
  }
  return a;
}

Poly MulPoly(const Poly& a, const Poly& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<uint32_t>(
          (out[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return out;
}

// Monic f of degree m is irreducible iff it has no monic factor of degree
// at most m/2.
bool IsIrreducible(const Poly& f, uint32_t p) {
  const uint32_t m = static_cast<uint32_t>(f.size() - 1);
  if (m == 1) return true;
  if (f[0] == 0) return false;
  for (uint32_t d = 1; d <= m / 2; ++d) {
    const uint64_t count = IPow(p, d);
    for (uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      uint64_t rest = idx;
      for (uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (RemMonic(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly Decode(uint32_t code, uint32_t p, uint32_t m) {
  Poly out(m, 0);
  for (uint32_t i = 0; i < m; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

uint32_t Encode(const Poly& a, uint32_t p) {
  uint32_t code = 0;
  for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

struct SlowArith {
  uint32_t p;
  uint32_t m;
  const Poly& modulus;

  uint32_t Mul(uint32_t a, uint32_t b) const {
    Poly r = RemMonic(MulPoly(Decode(a, p, m), Decode(b, p, m), p), modulus, p);
    return Encode(r, p);
  }
  uint32_t Pow(uint32_t a, uint64_t n) const {
    uint32_t result = 1;
    while (n > 0) {
      if (n & 1) result = Mul(result, a);
      a = Mul(a, a);
      n >>= 1;
    }
    return result;
  }
};

}  // namespace

std::shared_ptr<const ExtField> ExtField::Build(uint32_t p, uint32_t m,
                                                uint64_t cap) {
  if (p == 2) Fail(ErrorCode::kCompositeP, "p must be odd");
  if (!IsPrime(p)) {
    Fail(ErrorCode::kCompositeP,
         "p must be an odd prime, got " + std::to_string(p));
  }
  if (m < 1) Fail(ErrorCode::kBadArgument, "m must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > cap) {
      Fail(ErrorCode::kSizeExceeded,
           "field size exceeds cap " + std::to_string(cap));
    }
  }

  std::shared_ptr<ExtField> field(new ExtField());
  field->p_ = p;
  field->m_ = m;
  field->q_ = q;
  field->place_.resize(m);
  for (uint32_t i = 0; i < m; ++i) field->place_[i] = static_cast<uint32_t>(IPow(p, i));

  if (m == 1) {
    field->modulus_ = {0, 1};
  } else {
    for (uint64_t idx = 0; idx < q; ++idx) {
      Poly f = Decode(static_cast<uint32_t>(idx), p, m);
      f.push_back(1);
      if (IsIrreducible(f, p)) {
        field->modulus_ = std::move(f);
        break;
      }
    }
  }

  const SlowArith slow{p, m, field->modulus_};
  const std::vector<uint64_t> primes = PrimeFactors(q - 1);
  uint32_t alpha = 0;
  for (uint32_t code = 1; code < q && alpha == 0; ++code) {
    bool primitive = true;
    for (uint64_t r : primes) {
      if (slow.Pow(code, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) alpha = code;
  }
  // F_3 has alpha = 2 = -1; the loop above always finds one.
  field->alpha_ = {alpha};

  field->exp_.resize(q - 1);
  uint32_t x = 1;
  for (uint64_t n = 0; n + 1 < q; ++n) {
    field->exp_[n] = x;
    x = slow.Mul(x, alpha);
  }
  field->BuildLogTables();

  // Tr(X^i) = sum_j (X^i)^(p^j) is a constant; extend linearly.
  std::vector<uint32_t> basis_trace(m);
  for (uint32_t i = 0; i < m; ++i) {
    const uint32_t xi = field->place_[i];
    uint32_t power = xi;
    Poly sum(m, 0);
    for (uint32_t j = 0; j < m; ++j) {
      const Poly term = Decode(power, p, m);
      for (uint32_t t = 0; t < m; ++t) sum[t] = (sum[t] + term[t]) % p;
      power = slow.Pow(power, p);
    }
    basis_trace[i] = sum[0];  // the trace lies in F_p
  }
  field->trace_.resize(q);
  for (uint32_t code = 0; code < q; ++code) {
    uint64_t t = 0;
    for (uint32_t i = 0; i < m; ++i) t += uint64_t{field->Digit(code, i)} * basis_trace[i];
    field->trace_[code] = static_cast<uint32_t>(t % p);
  }
  return field;
}

void ExtField::BuildLogTables() {
  log_.assign(q_, -1);
  for (uint64_t n = 0; n + 1 < q_; ++n) log_[exp_[n]] = static_cast<int32_t>(n);
  log_one_plus_.resize(q_ - 1);
  log_one_minus_.resize(q_ - 1);
  for (uint64_t n = 0; n + 1 < q_; ++n) {
    const FieldElement x{exp_[n]};
    log_one_plus_[n] = log_[Add(One(), x).code];
    log_one_minus_[n] = log_[Sub(One(), x).code];
  }
}

std::shared_ptr<const ExtField> ExtField::WithAlpha(FieldElement alpha) const {
  if (!Contains(alpha) || alpha.code == 0 ||
      std::gcd(Dlog(alpha), q_ - 1) != 1) {
    Fail(ErrorCode::kBadArgument, "not a primitive element");
  }
  std::shared_ptr<ExtField> field(new ExtField(*this));
  const uint64_t step = Dlog(alpha);
  for (uint64_t n = 0; n + 1 < q_; ++n) {
    field->exp_[n] = exp_[MulMod(n, step, q_ - 1)];
  }
  field->alpha_ = alpha;
  field->BuildLogTables();
  return field;
}

FieldElement ExtField::FromInt(int64_t value) const {
  int64_t r = value % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<uint32_t>(r)};
}

FieldElement ExtField::FromCoeffs(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() > m_) Fail(ErrorCode::kBadArgument, "too many coefficients");
  uint32_t code = 0;
  for (size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i] % p_;
  return {code};
}

std::vector<uint32_t> ExtField::Coeffs(FieldElement x) const {
  return Decode(x.code, p_, m_);
}

FieldElement ExtField::Add(FieldElement a, FieldElement b) const {
  uint32_t code = 0;
  for (uint32_t i = 0; i < m_; ++i) {
    code += (Digit(a.code, i) + Digit(b.code, i)) % p_ * place_[i];
  }
  return {code};
}

FieldElement ExtField::Neg(FieldElement a) const {
  uint32_t code = 0;
  for (uint32_t i = 0; i < m_; ++i) {
    code += (p_ - Digit(a.code, i)) % p_ * place_[i];
  }
  return {code};
}

FieldElement ExtField::Sub(FieldElement a, FieldElement b) const {
  return Add(a, Neg(b));
}

FieldElement ExtField::Mul(FieldElement a, FieldElement b) const {
  if (a.code == 0 || b.code == 0) return Zero();
  return {exp_[(log_[a.code] + static_cast<uint64_t>(log_[b.code])) % (q_ - 1)]};
}

FieldElement ExtField::Inv(FieldElement a) const {
  if (a.code == 0) Fail(ErrorCode::kDivisionByZero, "inverse of zero");
  return {exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
}

FieldElement ExtField::Pow(FieldElement a, int64_t n) const {
  if (a.code == 0) {
    if (n < 0) Fail(ErrorCode::kDivisionByZero, "negative power of zero");
    return n == 0 ? One() : Zero();
  }
  const int64_t order = static_cast<int64_t>(q_ - 1);
  int64_t e = n % order;
  if (e < 0) e += order;
  return Exp(static_cast<uint64_t>(MulMod(log_[a.code], e, order)));
}

FieldElement ExtField::Arith(FieldElement a, FieldElement b, FieldOp op,
                             int64_t exponent) const {
  switch (op) {
    case FieldOp::kAdd: return Add(a, b);
    case FieldOp::kMul: return Mul(a, b);
    case FieldOp::kInv: return Inv(a);
    case FieldOp::kPow: return Pow(a, exponent);
    case FieldOp::kNeg: return Neg(a);
  }
  Fail(ErrorCode::kBadArgument, "unknown field operation");
}

uint64_t ExtField::Dlog(FieldElement x) const {
  if (x.code == 0) Fail(ErrorCode::kLogOfZero, "discrete log of zero");
  if (!Contains(x)) Fail(ErrorCode::kBadArgument, "element not in field");
  return static_cast<uint64_t>(log_[x.code]);
}

int64_t ExtField::LogOnePlusPower(uint64_t n) const {
  return log_one_plus_[n % (q_ - 1)];
}

int64_t ExtField::LogOneMinusPower(uint64_t n) const {
  return log_one_minus_[n % (q_ - 1)];
}

std::vector<FieldElement> ExtField::PrimitiveElements() const {
  std::vector<FieldElement> out;
  for (uint64_t n = 1; n < q_; ++n) {
    if (std::gcd(n, q_ - 1) == 1) out.push_back(Exp(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace slce::ff
