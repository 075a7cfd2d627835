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

#include "zerosum/partition.hpp"

#include <map>
#include <string>

#include "zerosum/egz.hpp"
#include "zerosum/error.hpp"
#include "zerosum/numtheory.hpp"

namespace zerosum {
namespace {

std::int64_t BlockSumMod(std::span<const std::int64_t> values,
                         const IndexSet& block, std::int64_t d) {
  std::int64_t s = 0;
  for (std::size_t i : block) s = FloorMod(s + FloorMod(values[i - 1], d), d);
  return s;
}

Peel MakePeel(std::vector<std::size_t> block, std::size_t n) {
  IndexSet set(std::move(block), n);
  IndexSet rest = set.Complement();
  return {std::move(set), std::move(rest)};
}

Peel PeelSingleClass(std::size_t n, std::size_t q) {
  return {IndexSet::Range(1, q, n), IndexSet::Range(q + 1, n, n)};
}

Peel PeelTwoClasses(std::span<const std::int64_t> values, std::size_t q,
                    std::int64_t d) {
  const std::size_t n = values.size();
  std::map<std::int64_t, std::size_t> class_size;
  for (std::int64_t v : values) ++class_size[FloorMod(v, d)];
  // Ordered map: on a tie the smaller residue comes first and wins.
  auto low = class_size.begin(), high = std::next(low);
  const std::int64_t major = low->second >= high->second ? low->first
                                                         : high->first;
  const std::int64_t minor = major == low->first ? high->first : low->first;

  std::vector<std::size_t> block;
  for (std::size_t i = 1; i <= n && block.size() < q; ++i) {
    if (FloorMod(values[i - 1], d) == major) block.push_back(i);
  }
  Peel peel = MakePeel(block, n);
  if (BlockSumMod(values, peel.rest, d) != 0) return peel;

  // The block sums to q*major = 0 mod d; trading one major index for a minor
  // one moves both sides off zero.
  std::size_t swap_in = 0;
  for (std::size_t j : peel.rest) {
    if (FloorMod(values[j - 1], d) == minor) {
      swap_in = j;
      break;
    }
  }
  if (swap_in == 0) {
    throw Error(ErrorCode::kPropertyViolation,
                "two-class peel found no minority index");
  }
  block.front() = swap_in;
  return MakePeel(std::move(block), n);
}

Peel PeelManyClasses(std::span<const std::int64_t> values, std::int64_t q,
                     std::int64_t d) {
  const std::size_t n = values.size();
  IndexSet base = FindZeroSumSubset(values, q);
  IndexSet rest = base.Complement();
  const std::int64_t total = SumMod(values, d);
  for (std::size_t i : base) {
    for (std::size_t j : rest) {
      std::int64_t diff = FloorMod(values[j - 1] - values[i - 1], d);
      if (diff == 0 || diff == total) continue;
      std::vector<std::size_t> block;
      block.reserve(base.size());
      for (std::size_t k : base) block.push_back(k == i ? j : k);
      return MakePeel(std::move(block), n);
    }
  }
  throw Error(ErrorCode::kPropertyViolation,
              "no exchange pair found with three or more residue classes");
}

void CheckShape(std::size_t n, std::int64_t q, std::int64_t d) {
  if (q < 1 || d < 1 || q % d != 0) {
    throw Error(ErrorCode::kInvalidShape,
                "need d | q with q, d >= 1, got q = " + std::to_string(q) +
                    ", d = " + std::to_string(d));
  }
  if (n < 2 * static_cast<std::size_t>(q)) {
    throw Error(ErrorCode::kInvalidShape,
                "need n >= 2q, got n = " + std::to_string(n) +
                    ", q = " + std::to_string(q));
  }
}

}  // namespace

bool SatisfiesBlockProperty(std::span<const std::int64_t> values,
                            const IndexSet& block, std::int64_t d) {
  if (BlockSumMod(values, block, d) != 0) return true;
  std::vector<std::int64_t> members = Gather(values, block);
  return members.empty() || ResidueClassCount(members, d) == 1;
}

bool IsValidBlockPartition(std::span<const std::int64_t> values,
                           const BlockPartition& partition, std::int64_t d) {
  const std::size_t n = values.size();
  if (partition.host_length != n) return false;
  if (partition.block_size * partition.blocks.size() != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (const IndexSet& block : partition.blocks) {
    if (block.size() != partition.block_size || block.host_length() != n) {
      return false;
    }
    for (std::size_t i : block) {
      if (seen[i]) return false;
      seen[i] = true;
    }
    if (!SatisfiesBlockProperty(values, block, d)) return false;
  }
  return true;
}

Peel PeelBlock(std::span<const std::int64_t> values, std::int64_t q,
               std::int64_t d) {
  CheckShape(values.size(), q, d);
  const std::size_t size = static_cast<std::size_t>(q);
  Peel peel;
  switch (ResidueClassCount(values, d)) {
    case 1:
      peel = PeelSingleClass(values.size(), size);
      break;
    case 2:
      peel = PeelTwoClasses(values, size, d);
      break;
    default:
      peel = PeelManyClasses(values, q, d);
      break;
  }
  if (peel.block.size() != size ||
      !SatisfiesBlockProperty(values, peel.block, d) ||
      !SatisfiesBlockProperty(values, peel.rest, d)) {
    throw Error(ErrorCode::kPropertyViolation,
                "peeled block " + ToString(peel.block) +
                    " fails the block property mod " + std::to_string(d));
  }
  return peel;
}

BlockPartition PartitionBlocks(std::span<const std::int64_t> values,
                               std::int64_t m, std::int64_t q, std::int64_t d) {
  const std::size_t n = values.size();
  if (m < 2 || q < 1 || static_cast<std::size_t>(m * q) != n) {
    throw Error(ErrorCode::kInvalidShape,
                "need n = m*q with m >= 2, got n = " + std::to_string(n) +
                    ", m = " + std::to_string(m) + ", q = " + std::to_string(q));
  }
  if (d < 1 || q % d != 0) {
    throw Error(ErrorCode::kInvalidShape,
                "d = " + std::to_string(d) + " does not divide q = " +
                    std::to_string(q));
  }

  BlockPartition partition;
  partition.host_length = n;
  partition.block_size = static_cast<std::size_t>(q);

  // remaining[i] is the host index of local position i + 1.
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i + 1;
  auto to_host = [&](const IndexSet& local) {
    std::vector<std::size_t> host;
    host.reserve(local.size());
    for (std::size_t i : local) host.push_back(remaining[i - 1]);
    return IndexSet(std::move(host), n);
  };

  for (std::int64_t left = m; left >= 2; --left) {
    std::vector<std::int64_t> local;
    local.reserve(remaining.size());
    for (std::size_t i : remaining) local.push_back(values[i - 1]);
    Peel peel = PeelBlock(local, q, d);
    partition.blocks.push_back(to_host(peel.block));
    if (left == 2) {
      partition.blocks.push_back(to_host(peel.rest));
    } else {
      std::vector<std::size_t> next;
      next.reserve(peel.rest.size());
      for (std::size_t i : peel.rest) next.push_back(remaining[i - 1]);
      remaining = std::move(next);
    }
  }

  if (!IsValidBlockPartition(values, partition, d)) {
    throw Error(ErrorCode::kPropertyViolation,
                "assembled partition fails verification");
  }
  return partition;
}

}  // namespace zerosum
