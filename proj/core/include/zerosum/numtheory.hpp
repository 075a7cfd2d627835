// Copyright 2026 The zerosum Authors
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

#pragma once

// Modular arithmetic and trial-division factorization for desk-scale
// integers. Residues in this library follow two conventions: FloorMod maps
// into [0, n) and LeastPositiveResidue maps into [1, n]; the latter is the
// one used for every 1-based index formula.

#include <cstdint>
#include <span>
#include <vector>

namespace zerosum {

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization ordered by increasing prime; empty for 1.
using Factorization = std::vector<PrimePower>;

Factorization Factorize(std::int64_t n);

// Product of prime^exponent.
std::int64_t Reassemble(const Factorization& factors);

bool IsPrime(std::int64_t n);

// Number of prime divisors counted with multiplicity (nu(12) = 3).
int PrimeOmega(std::int64_t n);

std::int64_t IntPow(std::int64_t base, int exponent);

// x mod n in [0, n). Requires n >= 1.
constexpr std::int64_t FloorMod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// x mod n in [1, n]; 0 maps to n. Requires n >= 1.
constexpr std::int64_t LeastPositiveResidue(std::int64_t x, std::int64_t n) {
  std::int64_t r = FloorMod(x, n);
  return r == 0 ? n : r;
}

__extension__ using WideInt = __int128;

// (a * b) mod n in [0, n) without intermediate overflow.
constexpr std::int64_t MulMod(std::int64_t a, std::int64_t b, std::int64_t n) {
  WideInt p = static_cast<WideInt>(FloorMod(a, n)) * FloorMod(b, n);
  return static_cast<std::int64_t>(p % n);
}

std::int64_t Gcd(std::int64_t a, std::int64_t b);

// x in [1, m-1] with a*x = 1 (mod m). Throws kNotInvertible when
// gcd(a, m) != 1 and kInvalidArgument when m < 2.
std::int64_t ModInverse(std::int64_t a, std::int64_t m);

// Sum of values mod n, in [0, n).
std::int64_t SumMod(std::span<const std::int64_t> values, std::int64_t n);

// Number of distinct residues mod d among values.
int ResidueClassCount(std::span<const std::int64_t> values, std::int64_t d);

}  // namespace zerosum
