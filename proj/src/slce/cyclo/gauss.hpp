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

#ifndef SLCE_CYCLO_GAUSS_HPP_
#define SLCE_CYCLO_GAUSS_HPP_

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "slce/cyclo/character.hpp"
#include "slce/cyclo/cyc_int.hpp"

namespace slce::cyclo {

// G(chi) = sum_x chi(x) zeta_p^Tr(x) in double precision; G(eps) = -1 under
// the chi(0) = 0 convention.
std::complex<double> GaussSumNumeric(const Character& chi);

// Closed form of the quadratic Gauss sum G(rho) over F_{p^m}:
// (-1)^(m-1) sqrt(q) when p = 1 mod 4, (-1)^(m-1) i^m sqrt(q) when p = 3 mod 4.
struct QuadraticGauss {
  int sign = 1;
  bool imaginary = false;
  uint64_t q = 0;

  std::complex<double> Value() const;
  // sign * p^(m/2) when m is even.
  std::optional<BigInt> AsInteger(uint32_t p, uint32_t m) const;
  // e.g. "+sqrt(5)", "-i*sqrt(27)".
  std::string ToString() const;
};

QuadraticGauss QuadraticGaussClosed(uint32_t p, uint32_t m);

struct SemiprimitiveGauss {
  uint64_t v = 0;
  uint64_t w = 0;
  // sign * p^(v w), with the numerically determined sign.
  BigInt value;
  int formula_sign = 1;
  int numeric_sign = 1;
  std::complex<double> numeric;
  bool formula_mismatch = false;
};

// G(chi) for chi of order N > 2 when p^v = -1 (mod N) for a minimal v and
// m = 2 v w. The sign formula (-1)^(w - 1 + p w (p^v + 1)/N) is checked
// against the numeric sum of eta_{1/N}; disagreement sets formula_mismatch.
// Throws NotSemiprimitive when the hypotheses fail.
SemiprimitiveGauss SemiprimitiveGaussClosed(uint32_t p, uint32_t m, uint64_t N,
                                            uint64_t cap);

}  // namespace slce::cyclo

#endif  // SLCE_CYCLO_GAUSS_HPP_
