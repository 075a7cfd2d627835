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

#include "zerosum/primepower.hpp"

#include <string>
#include <vector>

#include "zerosum/error.hpp"
#include "zerosum/numtheory.hpp"
#include "zerosum/partition.hpp"

namespace zerosum {
namespace {

// sum_k k * values[k] mod n with 1-based k.
std::int64_t IndexWeightedSum(std::span<const std::int64_t> values,
                              std::int64_t n) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    s = FloorMod(s + MulMod(static_cast<std::int64_t>(k + 1), values[k], n), n);
  }
  return s;
}

bool AllCongruent(std::span<const std::int64_t> values, std::int64_t p) {
  return ResidueClassCount(values, p) == 1;
}

Permutation Solve(std::span<const std::int64_t> values, std::int64_t p,
                  int alpha) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  const std::int64_t total = SumMod(values, n);

  if (total % p != 0) {
    // Shifting every index by l adds l * total to the weighted sum.
    std::int64_t weighted = IndexWeightedSum(values, n);
    std::int64_t shift =
        LeastPositiveResidue(MulMod(-weighted, ModInverse(total, n), n), n);
    return ShiftPermutation(shift, n);
  }
  if (!AllCongruent(values, p)) {
    throw Error(ErrorCode::kHypothesisViolated,
                "sum is 0 mod " + std::to_string(p) +
                    " and the values span several residue classes");
  }
  if (alpha == 1) {
    // sum k * a_1 = a_1 * p (p + 1) / 2 = 0 mod p.
    return Permutation::Identity(values.size());
  }

  // a_k = a_1 + p * b_k (mod n); descend on b mod p^(alpha-1).
  std::vector<std::int64_t> descent(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    descent[k] = FloorMod(values[k] - values[0], n) / p;
  }
  const std::int64_t sub = n / p;
  BlockPartition partition = PartitionBlocks(descent, p, sub, p);

  std::vector<std::size_t> images(values.size());
  for (std::size_t s = 0; s < partition.blocks.size(); ++s) {
    const IndexSet& block = partition.blocks[s];
    std::vector<std::int64_t> local = Gather<std::int64_t>(descent, block);
    Permutation inner = Solve(local, p, alpha - 1);
    for (std::size_t t = 1; t <= block.size(); ++t) {
      images[s * block.size() + t - 1] = block[inner(t) - 1];
    }
  }
  return Permutation(std::move(images));
}

}  // namespace

Permutation ShiftPermutation(std::int64_t shift, std::int64_t n) {
  if (n < 1 || shift < 1 || shift > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "shift " + std::to_string(shift) + " outside [1, " +
                    std::to_string(n) + "]");
  }
  std::vector<std::size_t> images(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    images[k - 1] = static_cast<std::size_t>(LeastPositiveResidue(k - shift, n));
  }
  return Permutation(std::move(images));
}

bool PrimePowerHypothesisHolds(std::span<const std::int64_t> values,
                               std::int64_t p) {
  return SumMod(values, p) != 0 || AllCongruent(values, p);
}

Permutation SolvePrimePower(std::span<const std::int64_t> values,
                            std::int64_t p, int alpha) {
  if (p < 3 || !IsPrime(p) || alpha < 1) {
    throw Error(ErrorCode::kInvalidShape,
                "need an odd prime p and alpha >= 1, got p = " +
                    std::to_string(p) + ", alpha = " + std::to_string(alpha));
  }
  const std::int64_t n = IntPow(p, alpha);
  if (static_cast<std::int64_t>(values.size()) != n) {
    throw Error(ErrorCode::kInvalidShape,
                "length " + std::to_string(values.size()) + " is not " +
                    std::to_string(p) + "^" + std::to_string(alpha));
  }
  if (!PrimePowerHypothesisHolds(values, p)) {
    throw Error(ErrorCode::kHypothesisViolated,
                "sum is 0 mod " + std::to_string(p) +
                    " and the values span several residue classes");
  }
  Permutation sigma = Solve(values, p, alpha);

  std::int64_t check = 0;
  for (std::size_t k = 1; k <= sigma.size(); ++k) {
    check = FloorMod(
        check + MulMod(static_cast<std::int64_t>(k), values[sigma(k) - 1], n), n);
  }
  if (check != 0) {
    throw Error(ErrorCode::kInternalContradiction,
                "prime-power arrangement misses by " + std::to_string(check));
  }
  return sigma;
}

}  // namespace zerosum
