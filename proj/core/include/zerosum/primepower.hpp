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

// Zero-sum arrangements of prime-power length. For n = p^alpha with p an odd
// prime, if sum(a) is not 0 mod p or all a_k agree mod p, some sigma gives
// sum_k k * a_sigma(k) = 0 (mod n).

#include <cstdint>
#include <span>

#include "zerosum/permutation.hpp"

namespace zerosum {

// sigma(k) = least positive residue of k - shift mod n. Requires
// 1 <= shift <= n.
Permutation ShiftPermutation(std::int64_t shift, std::int64_t n);

// True when the hypothesis above holds for values mod p.
bool PrimePowerHypothesisHolds(std::span<const std::int64_t> values,
                               std::int64_t p);

// Throws kInvalidShape unless values.size() == p^alpha with p an odd prime
// and alpha >= 1; throws kHypothesisViolated when the hypothesis fails.
Permutation SolvePrimePower(std::span<const std::int64_t> values,
                            std::int64_t p, int alpha);

}  // namespace zerosum
