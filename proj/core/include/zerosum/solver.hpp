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

// Zero-sum rearrangements for even n. Given a_1..a_n with n | sum(a), the
// solver builds sigma with sum_k k * a_sigma(k) = 0 (mod n/2), recursing on
// the number of prime factors of n:
//
//  * n = 2: identity.
//  * n = 2^alpha: an EGZ witness I of size n/2 splits the input into two
//    halves with sums 0 mod n/2; each half is solved recursively, I takes the
//    even positions and its complement the odd ones.
//  * otherwise n = p^alpha * m with p the smallest odd prime factor: blocks of
//    size p^alpha are arranged mod p^alpha by SolvePrimePower, the block sums
//    are arranged recursively mod m/2, and the two arrangements are joined
//    along the residue system k = p^alpha * s + m * t (mod n).
//
// For weights w_k = f + (k-1) e with e even the same sigma gives
// sum_k w_k a_sigma(k) = 0 (mod n).

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zerosum/permutation.hpp"

namespace zerosum {

using BigInt = boost::multiprecision::cpp_int;

struct Instance {
  std::vector<std::int64_t> values;

  std::size_t n() const { return values.size(); }
};

// Throws kInvalidInstance unless n is even, n >= 2 and n | sum(values).
void ValidateInstance(const Instance& instance);

struct WeightSpec {
  enum class Kind { kNatural, kArithmeticProgression };

  Kind kind = Kind::kNatural;
  std::int64_t first = 0;
  std::int64_t diff = 0;

  static WeightSpec Natural() { return {}; }
  static WeightSpec Progression(std::int64_t first, std::int64_t diff) {
    return {Kind::kArithmeticProgression, first, diff};
  }

  // w_k for k in [1, n].
  BigInt Weight(std::size_t k) const;

  // n/2 for natural weights, n for progressions.
  std::int64_t TargetModulus(std::size_t n) const;

  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

struct Certificate {
  Instance instance;
  WeightSpec weights;
  // Raw images so that tampered certificates can still be represented.
  std::vector<std::size_t> sigma;
  BigInt achieved_sum;
  std::int64_t modulus = 1;
};

// sum_k w_k * values[sigma(k)], exact. sigma must have values.size() entries
// in [1, n].
BigInt WeightedSum(std::span<const std::int64_t> values,
                   const WeightSpec& weights,
                   std::span<const std::size_t> sigma);

Permutation SolveHalf(const Instance& instance);

// Throws kInvalidInstance, or kOddCommonDifference for progressions with odd
// difference.
Certificate SolveWeighted(const Instance& instance, const WeightSpec& weights);

// sigma(2k) = even_side[k], sigma(2k-1) = odd_side[k]. Both sides are image
// lists into [1, n] of length n/2; together they must cover [1, n].
// Throws kShapeMismatch otherwise.
Permutation InterleaveEven(std::span<const std::size_t> even_side,
                           std::span<const std::size_t> odd_side);

// The unique (s, t) in [1, m] x [1, q] with k = q*s + m*t (mod q*m).
// Requires gcd(q, m) = 1.
std::pair<std::int64_t, std::int64_t> CrtPair(std::int64_t k, std::int64_t q,
                                              std::int64_t m);

// sigma(k) = blocks[tau(s) - 1][t - 1] where (s, t) = CrtPair(k, q, m).
// blocks holds m image lists of length q into [1, q*m]. Throws kNotCoprime
// when gcd(q, m) != 1 and kShapeMismatch when the sizes disagree or the
// result is not a bijection.
Permutation InterleaveCrt(const Permutation& tau,
                          const std::vector<std::vector<std::size_t>>& blocks,
                          std::int64_t q, std::int64_t m);

}  // namespace zerosum
