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

#include "zerosum/numtheory.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "zerosum/error.hpp"

namespace zerosum {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kInsufficientLength: return "InsufficientLength";
    case ErrorCode::kInternalContradiction: return "InternalContradiction";
    case ErrorCode::kInvalidShape: return "InvalidShape";
    case ErrorCode::kPropertyViolation: return "PropertyViolation";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kOddCommonDifference: return "OddCommonDifference";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kNotBijection: return "NotBijection";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Factorization Factorize(std::int64_t n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot factorize " + std::to_string(n));
  }
  Factorization factors;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  if (n > 1) factors.push_back({n, 1});
  return factors;
}

std::int64_t Reassemble(const Factorization& factors) {
  std::int64_t n = 1;
  for (const auto& [p, e] : factors) n *= IntPow(p, e);
  return n;
}

bool IsPrime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

int PrimeOmega(std::int64_t n) {
  int total = 0;
  for (const auto& f : Factorize(n)) total += f.exponent;
  return total;
}

std::int64_t IntPow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::int64_t Gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t ModInverse(std::int64_t a, std::int64_t m) {
  if (m < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus must be >= 2, got " + std::to_string(m));
  }
  // Extended Euclid on (a mod m, m).
  std::int64_t old_r = FloorMod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::kNotInvertible,
                std::to_string(a) + " has no inverse mod " + std::to_string(m));
  }
  return FloorMod(old_s, m);
}

std::int64_t SumMod(std::span<const std::int64_t> values, std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t v : values) s = FloorMod(s + FloorMod(v, n), n);
  return s;
}

int ResidueClassCount(std::span<const std::int64_t> values, std::int64_t d) {
  std::vector<std::int64_t> residues;
  residues.reserve(values.size());
  for (std::int64_t v : values) residues.push_back(FloorMod(v, d));
  std::sort(residues.begin(), residues.end());
  return static_cast<int>(
      std::unique(residues.begin(), residues.end()) - residues.begin());
}

}  // namespace zerosum
