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

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "zerosum/index_set.hpp"

namespace zerosum {

// m disjoint blocks of size q covering [1, n], n = m*q.
struct BlockPartition {
  std::size_t host_length = 0;
  std::size_t block_size = 0;
  std::vector<IndexSet> blocks;
};

// The block property: a block whose value sum is divisible by d holds a
// single residue class mod d.
bool SatisfiesBlockProperty(std::span<const std::int64_t> values,
                            const IndexSet& block, std::int64_t d);

// Checks disjointness, coverage, block sizes and the block property for every
// block.
bool IsValidBlockPartition(std::span<const std::int64_t> values,
                           const BlockPartition& partition, std::int64_t d);

struct Peel {
  IndexSet block;
  IndexSet rest;
};

// Splits [1, n] into a block of size q and its complement so that both
// sides satisfy the block property mod d. Requires d | q and n >= 2q.
//
// The construction dispatches on the number of residue classes mod d:
//  * one class: the first q indices;
//  * two classes: q lowest indices of the majority class, swapping its lowest
//    index with the lowest minority index when the complement sum is 0 mod d;
//  * more: an EGZ witness mod q, then the first pair (i, j) in block x rest
//    with a_j - a_i not congruent to 0 or to the total sum mod d is swapped.
Peel PeelBlock(std::span<const std::int64_t> values, std::int64_t q,
               std::int64_t d);

// Repeated peeling: blocks[0] is PeelBlock's block on the full input, the
// following blocks come from peeling the remainder. Throws kInvalidShape when
// values.size() != m*q, d does not divide q, or m < 2; throws
// kPropertyViolation if a level fails self-verification.
BlockPartition PartitionBlocks(std::span<const std::int64_t> values,
                               std::int64_t m, std::int64_t q, std::int64_t d);

}  // namespace zerosum
