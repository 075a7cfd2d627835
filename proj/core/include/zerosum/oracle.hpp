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

// Brute-force ground truth: exact assignment search, zero-sum multiset
// enumeration, exhaustive conjecture sweeps and certificate checking. None of
// this uses the constructive solver.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zerosum/permutation.hpp"
#include "zerosum/solver.hpp"

namespace zerosum {

inline constexpr std::size_t kDefaultMaxAssignmentN = 20;

// Returns sigma with sum_k w_k * a[sigma(k)] = 0 (mod modulus), or nullopt
// when no permutation works. The search is a memoized DP over (set of used
// a-indices, partial sum mod modulus), so nullopt is exact.
// Throws kTooLarge when n > max_n or the state table would be too big, and
// kInvalidArgument for mismatched lengths or modulus < 1.
std::optional<Permutation> ExistsAssignment(
    std::span<const std::int64_t> a, std::span<const std::int64_t> w,
    std::int64_t modulus, std::size_t max_n = kDefaultMaxAssignmentN);

// Plain n! enumeration; only meant for cross-checking at small n (n <= 10).
std::optional<Permutation> ExistsAssignmentNaive(
    std::span<const std::int64_t> a, std::span<const std::int64_t> w,
    std::int64_t modulus);

inline constexpr std::int64_t kMaxEnumerationN = 10;

// Visits every nondecreasing sequence over [0, n) of length n with sum 0 mod n
// in lexicographic order. Throws kTooLarge for n > kMaxEnumerationN.
void ForEachZeroSumSequence(
    std::int64_t n,
    const std::function<void(std::span<const std::int64_t>)>& visit);

std::vector<std::vector<std::int64_t>> EnumerateZeroSumSequences(
    std::int64_t n);

// Smallest image of seq under a -> u*a + c (mod n), u a unit, re-sorted.
std::vector<std::int64_t> AffineCanonicalForm(std::span<const std::int64_t> seq,
                                              std::int64_t n);

struct ConjectureOptions {
  bool symmetry_reduction = false;
  unsigned jobs = 1;
  // Largest n accepted; n = max_n + 2 is also accepted with symmetry
  // reduction.
  std::int64_t max_n = 8;
};

struct ConjectureReport {
  enum class Status { kVerified, kCounterexample };

  std::int64_t n = 0;
  Status status = Status::kVerified;
  // Set on kCounterexample; a and w are zero-sum and admit no permutation.
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> w;
  // Pairs in canonical order up to and including the deciding one.
  std::uint64_t pairs_examined = 0;
  // Size of the pair space actually swept (after symmetry reduction).
  std::uint64_t reduced_pairs = 0;
  // Unreduced pair space, |zero-sum multisets|^2.
  std::uint64_t total_pairs = 0;
  double seconds = 0.0;
};

std::string_view StatusName(ConjectureReport::Status status);

// Checks, for every pair of zero-sum multisets (a, w) over Z_n, whether some
// permutation makes sum w_k a_sigma(k) = 0 (mod n). Stops at the first failing
// pair in canonical order (a-major, both in enumeration order).
ConjectureReport CheckConjecture(std::int64_t n,
                                 const ConjectureOptions& options = {});

// One line of the sweep CSV: n,status,pairs_examined,seconds
std::string CsvHeader();
std::string CsvRow(const ConjectureReport& report);

struct VerifyResult {
  enum class Reason { kOk, kNotBijection, kWrongSum, kWrongModulus };

  Reason reason = Reason::kOk;
  std::string message;

  bool ok() const { return reason == Reason::kOk; }
  explicit operator bool() const { return ok(); }
};

std::string_view ReasonName(VerifyResult::Reason reason);

// Recomputes everything from scratch with exact arithmetic.
VerifyResult VerifyCertificate(const Certificate& certificate);

}  // namespace zerosum
