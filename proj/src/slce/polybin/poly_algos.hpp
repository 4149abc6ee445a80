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

#ifndef SLCE_POLYBIN_POLY_ALGOS_HPP_
#define SLCE_POLYBIN_POLY_ALGOS_HPP_

#include <cstdint>
#include <vector>

#include "slce/polybin/binary_poly.hpp"

namespace slce::ff {
class ResidueField;
}

namespace slce::polybin {

// C(n, t) mod 2 by Lucas: odd iff every bit of t is also set in n.
constexpr bool BinomMod2(uint64_t n, uint64_t t) { return (n & t) == t; }

// The t-th Hasse derivative sum_n C(n, t) a_n X^(n-t) over F_2.
BinaryPoly HasseDerivative(const BinaryPoly& f, uint64_t t);

// Number of binary digits of t (0 for t = 0); the smallest h with t < 2^h.
unsigned BitLengthH(uint64_t t);

// I_t: all i in [0, 2^h) whose bits cover the bits of t, ascending.
std::vector<uint64_t> IndexSet(uint64_t t);

// k-th cyclotomic polynomial reduced mod 2.
BinaryPoly CyclotomicMod2(uint64_t k);

// Distinct irreducible factors of Phi_k over F_2 (k odd), each of degree
// ord_k(2), sorted ascending. Throws EvenK for even k.
std::vector<BinaryPoly> FactorPhiMod2(uint64_t k);

// Exact multiplicity of beta as a root of f, where beta is an element of
// the residue field rf. Throws ZeroPolynomial for f = 0.
uint64_t RootMultiplicity(const BinaryPoly& f, const BinaryPoly& beta,
                          const ff::ResidueField& rf);

}  // namespace slce::polybin

#endif  // SLCE_POLYBIN_POLY_ALGOS_HPP_
