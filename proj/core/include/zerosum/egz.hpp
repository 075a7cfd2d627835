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

// Constructive Erdos-Ginzburg-Ziv: among any 2q-1 integers there are q whose
// sum is divisible by q. The theorem only asserts existence; the witness here
// comes from a subset-count DP over residues.

#include <cstdint>
#include <span>

#include "zerosum/index_set.hpp"

namespace zerosum {

// Returns q indices (1-based, into values) whose values sum to 0 mod q.
//
// Only the first 2q-1 entries are scanned, and among q-subsets of that prefix
// the lexicographically smallest zero-sum one is returned, so the witness is
// a deterministic function of the input. Runs in O(q^3 / 64) time and
// O(q^3 / 8) bytes.
//
// Throws kInvalidArgument for q < 1, kInsufficientLength when
// values.size() < 2q-1 and kInternalContradiction if no witness is found.
IndexSet FindZeroSumSubset(std::span<const std::int64_t> values,
                           std::int64_t q);

}  // namespace zerosum
