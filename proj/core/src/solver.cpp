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

#include "zerosum/solver.hpp"

#include <string>

#include "zerosum/egz.hpp"
#include "zerosum/error.hpp"
#include "zerosum/index_set.hpp"
#include "zerosum/numtheory.hpp"
#include "zerosum/partition.hpp"
#include "zerosum/primepower.hpp"

namespace zerosum {
namespace {

void Require(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::kInternalContradiction, what);
}

std::vector<std::size_t> Compose(const IndexSet& block,
                                 const Permutation& local) {
  std::vector<std::size_t> images(local.size());
  for (std::size_t k = 1; k <= local.size(); ++k) {
    images[k - 1] = block[local(k) - 1];
  }
  return images;
}

Permutation SolveReduced(const std::vector<std::int64_t>& values);

// residues are reduced mod n on entry to every level.
std::vector<std::int64_t> Reduced(std::span<const std::int64_t> values,
                                  std::int64_t n) {
  std::vector<std::int64_t> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = FloorMod(values[i], n);
  return out;
}

Permutation SolvePowerOfTwo(const std::vector<std::int64_t>& values) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  const std::int64_t half = n / 2;
  IndexSet even_block = FindZeroSumSubset(values, half);
  IndexSet odd_block = even_block.Complement();
  std::vector<std::int64_t> even_values = Gather<std::int64_t>(values, even_block);
  std::vector<std::int64_t> odd_values = Gather<std::int64_t>(values, odd_block);
  Require(SumMod(even_values, half) == 0 && SumMod(odd_values, half) == 0,
          "EGZ halves of n = " + std::to_string(n) + " are not zero-sum mod " +
              std::to_string(half));

  Permutation even_sigma = SolveReduced(Reduced(even_values, half));
  Permutation odd_sigma = SolveReduced(Reduced(odd_values, half));
  return InterleaveEven(Compose(even_block, even_sigma),
                        Compose(odd_block, odd_sigma));
}

Permutation SolveWithOddPrime(const std::vector<std::int64_t>& values,
                              const PrimePower& odd) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  const std::int64_t q = IntPow(odd.prime, odd.exponent);
  const std::int64_t m = n / q;

  BlockPartition partition = PartitionBlocks(values, m, q, odd.prime);
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::int64_t> block_sums;
  blocks.reserve(partition.blocks.size());
  block_sums.reserve(partition.blocks.size());
  for (const IndexSet& block : partition.blocks) {
    std::vector<std::int64_t> local = Gather<std::int64_t>(values, block);
    blocks.push_back(Compose(block, SolvePrimePower(local, odd.prime, odd.exponent)));
    block_sums.push_back(SumMod(local, m));
  }
  Require(SumMod(block_sums, m) == 0,
          "block sums of n = " + std::to_string(n) + " are not zero-sum mod " +
              std::to_string(m));

  Permutation tau = SolveReduced(block_sums);
  return InterleaveCrt(tau, blocks, q, m);
}

Permutation SolveReduced(const std::vector<std::int64_t>& values) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  if (n == 2) return Permutation::Identity(2);
  Factorization factors = Factorize(n);
  if (factors.size() == 1) return SolvePowerOfTwo(values);
  return SolveWithOddPrime(values, factors[1]);
}

}  // namespace

void ValidateInstance(const Instance& instance) {
  const std::size_t n = instance.n();
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorCode::kInvalidInstance,
                "n must be even and at least 2, got " + std::to_string(n));
  }
  if (SumMod(instance.values, static_cast<std::int64_t>(n)) != 0) {
    throw Error(ErrorCode::kInvalidInstance,
                "sum of values is not divisible by n = " + std::to_string(n));
  }
}

BigInt WeightSpec::Weight(std::size_t k) const {
  if (kind == Kind::kNatural) return BigInt(k);
  return BigInt(first) + BigInt(k - 1) * BigInt(diff);
}

std::int64_t WeightSpec::TargetModulus(std::size_t n) const {
  const auto size = static_cast<std::int64_t>(n);
  return kind == Kind::kNatural ? size / 2 : size;
}

BigInt WeightedSum(std::span<const std::int64_t> values,
                   const WeightSpec& weights,
                   std::span<const std::size_t> sigma) {
  BigInt total = 0;
  for (std::size_t k = 1; k <= sigma.size(); ++k) {
    total += weights.Weight(k) * BigInt(values[sigma[k - 1] - 1]);
  }
  return total;
}

Permutation SolveHalf(const Instance& instance) {
  ValidateInstance(instance);
  const auto n = static_cast<std::int64_t>(instance.n());
  Permutation sigma = SolveReduced(Reduced(instance.values, n));

  std::int64_t doubled = 0;
  for (std::size_t k = 1; k <= sigma.size(); ++k) {
    doubled = FloorMod(
        doubled + MulMod(static_cast<std::int64_t>(2 * k),
                         instance.values[sigma(k) - 1], n),
        n);
  }
  Require(doubled == 0, "arrangement for n = " + std::to_string(n) +
                            " misses the target congruence");
  return sigma;
}

Certificate SolveWeighted(const Instance& instance, const WeightSpec& weights) {
  if (weights.kind == WeightSpec::Kind::kArithmeticProgression &&
      weights.diff % 2 != 0) {
    throw Error(ErrorCode::kOddCommonDifference,
                "common difference " + std::to_string(weights.diff) +
                    " is odd");
  }
  Permutation sigma = SolveHalf(instance);
  Certificate cert;
  cert.instance = instance;
  cert.weights = weights;
  cert.sigma.assign(sigma.images().begin(), sigma.images().end());
  cert.achieved_sum = WeightedSum(instance.values, weights, cert.sigma);
  cert.modulus = weights.TargetModulus(instance.n());
  Require(cert.achieved_sum % cert.modulus == 0,
          "weighted sum is not divisible by " + std::to_string(cert.modulus));
  return cert;
}

Permutation InterleaveEven(std::span<const std::size_t> even_side,
                           std::span<const std::size_t> odd_side) {
  if (even_side.size() != odd_side.size() || even_side.empty()) {
    throw Error(ErrorCode::kShapeMismatch,
                "interleaved sides have sizes " +
                    std::to_string(even_side.size()) + " and " +
                    std::to_string(odd_side.size()));
  }
  std::vector<std::size_t> images(2 * even_side.size());
  for (std::size_t k = 1; k <= even_side.size(); ++k) {
    images[2 * k - 1] = even_side[k - 1];
    images[2 * k - 2] = odd_side[k - 1];
  }
  if (!IsBijection(images)) {
    throw Error(ErrorCode::kShapeMismatch,
                "interleaved sides do not partition [1, n]");
  }
  return Permutation(std::move(images));
}

std::pair<std::int64_t, std::int64_t> CrtPair(std::int64_t k, std::int64_t q,
                                              std::int64_t m) {
  if (Gcd(q, m) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                std::to_string(q) + " and " + std::to_string(m) +
                    " are not coprime");
  }
  // Mod q the term q*s vanishes, so t = k / m; symmetrically s = k / q mod m.
  std::int64_t t = q == 1 ? 1 : LeastPositiveResidue(MulMod(k, ModInverse(m, q), q), q);
  std::int64_t s = m == 1 ? 1 : LeastPositiveResidue(MulMod(k, ModInverse(q, m), m), m);
  return {s, t};
}

Permutation InterleaveCrt(const Permutation& tau,
                          const std::vector<std::vector<std::size_t>>& blocks,
                          std::int64_t q, std::int64_t m) {
  if (Gcd(q, m) != 1) {
    throw Error(ErrorCode::kNotCoprime,
                std::to_string(q) + " and " + std::to_string(m) +
                    " are not coprime");
  }
  if (m < 1 || q < 1 || tau.size() != static_cast<std::size_t>(m) ||
      blocks.size() != static_cast<std::size_t>(m)) {
    throw Error(ErrorCode::kShapeMismatch,
                "expected " + std::to_string(m) + " blocks and a permutation "
                "of that size");
  }
  for (const auto& block : blocks) {
    if (block.size() != static_cast<std::size_t>(q)) {
      throw Error(ErrorCode::kShapeMismatch,
                  "block of size " + std::to_string(block.size()) +
                      ", expected " + std::to_string(q));
    }
  }
  const std::int64_t n = q * m;
  std::vector<std::size_t> images(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) {
    auto [s, t] = CrtPair(k, q, m);
    images[k - 1] = blocks[tau(static_cast<std::size_t>(s)) - 1][t - 1];
  }
  if (!IsBijection(images)) {
    throw Error(ErrorCode::kShapeMismatch,
                "blocks do not partition [1, " + std::to_string(n) + "]");
  }
  return Permutation(std::move(images));
}

}  // namespace zerosum
