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

#include "zerosum/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "zerosum/error.hpp"
#include "zerosum/numtheory.hpp"

namespace zerosum {
namespace {

constexpr std::uint64_t kMaxStateBits = std::uint64_t{1} << 31;

void CheckAssignmentArgs(std::span<const std::int64_t> a,
                         std::span<const std::int64_t> w,
                         std::int64_t modulus) {
  if (a.size() != w.size() || a.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "a and w must be nonempty and of equal length");
  }
  if (modulus < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus must be positive, got " + std::to_string(modulus));
  }
}

// Depth-first walk of the (used set, partial sum) DP with a table of states
// already known to be dead ends. Weight k + 1 is assigned when |used| = k.
class AssignmentSearch {
 public:
  AssignmentSearch(std::span<const std::int64_t> a,
                   std::span<const std::int64_t> w, std::int64_t modulus)
      : n_(a.size()),
        modulus_(modulus),
        full_((std::uint32_t{1} << n_) - 1),
        dead_((std::size_t{1} << n_) * static_cast<std::size_t>(modulus)) {
    a_.reserve(n_);
    w_.reserve(n_);
    for (std::int64_t v : a) a_.push_back(FloorMod(v, modulus));
    for (std::int64_t v : w) w_.push_back(FloorMod(v, modulus));
    // Indices with equal residues are interchangeable; only the lowest unused
    // one of each class is ever tried.
    same_before_.assign(n_, 0);
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (a_[i] == a_[j]) same_before_[j] |= std::uint32_t{1} << i;
      }
    }
    path_.reserve(n_);
  }

  std::optional<Permutation> Run() {
    if (!Visit(0, 0)) return std::nullopt;
    std::vector<std::size_t> images(path_.begin(), path_.end());
    return Permutation(std::move(images));
  }

 private:
  bool Visit(std::uint32_t used, std::int64_t partial) {
    if (used == full_) return partial == 0;
    const std::size_t state =
        static_cast<std::size_t>(used) * static_cast<std::size_t>(modulus_) +
        static_cast<std::size_t>(partial);
    if (dead_[state]) return false;
    const std::size_t k = static_cast<std::size_t>(std::popcount(used));
    for (std::size_t j = 0; j < n_; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (used & bit) continue;
      if (same_before_[j] & ~used) continue;
      path_.push_back(j + 1);
      if (Visit(used | bit,
                FloorMod(partial + MulMod(w_[k], a_[j], modulus_), modulus_))) {
        return true;
      }
      path_.pop_back();
    }
    dead_[state] = true;
    return false;
  }

  std::size_t n_;
  std::int64_t modulus_;
  std::uint32_t full_;
  std::vector<std::int64_t> a_, w_;
  std::vector<std::uint32_t> same_before_;
  std::vector<bool> dead_;
  std::vector<std::size_t> path_;
};

void Enumerate(std::int64_t n, std::vector<std::int64_t>& prefix,
               std::int64_t lowest, std::int64_t partial,
               const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (static_cast<std::int64_t>(prefix.size()) == n) {
    if (partial == 0) visit(prefix);
    return;
  }
  for (std::int64_t v = lowest; v < n; ++v) {
    prefix.push_back(v);
    Enumerate(n, prefix, v, (partial + v) % n, visit);
    prefix.pop_back();
  }
}

}  // namespace

std::optional<Permutation> ExistsAssignment(std::span<const std::int64_t> a,
                                            std::span<const std::int64_t> w,
                                            std::int64_t modulus,
                                            std::size_t max_n) {
  CheckAssignmentArgs(a, w, modulus);
  const std::size_t cap = std::min<std::size_t>(max_n, 30);
  if (a.size() > cap) {
    throw Error(ErrorCode::kTooLarge,
                "n = " + std::to_string(a.size()) + " exceeds the cap of " +
                    std::to_string(cap));
  }
  if ((std::uint64_t{1} << a.size()) >
      kMaxStateBits / static_cast<std::uint64_t>(modulus)) {
    throw Error(ErrorCode::kTooLarge,
                "state table for n = " + std::to_string(a.size()) +
                    ", modulus = " + std::to_string(modulus) + " is too large");
  }
  return AssignmentSearch(a, w, modulus).Run();
}

std::optional<Permutation> ExistsAssignmentNaive(
    std::span<const std::int64_t> a, std::span<const std::int64_t> w,
    std::int64_t modulus) {
  CheckAssignmentArgs(a, w, modulus);
  std::vector<std::size_t> images(a.size());
  std::iota(images.begin(), images.end(), std::size_t{1});
  do {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < images.size(); ++k) {
      s = FloorMod(s + MulMod(w[k], a[images[k] - 1], modulus), modulus);
    }
    if (s == 0) return Permutation(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

void ForEachZeroSumSequence(
    std::int64_t n,
    const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "n must be positive, got " + std::to_string(n));
  }
  if (n > kMaxEnumerationN) {
    throw Error(ErrorCode::kTooLarge,
                "enumeration is capped at n = " +
                    std::to_string(kMaxEnumerationN));
  }
  std::vector<std::int64_t> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  Enumerate(n, prefix, 0, 0, visit);
}

std::vector<std::vector<std::int64_t>> EnumerateZeroSumSequences(
    std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  ForEachZeroSumSequence(n, [&](std::span<const std::int64_t> seq) {
    out.emplace_back(seq.begin(), seq.end());
  });
  return out;
}

std::vector<std::int64_t> AffineCanonicalForm(std::span<const std::int64_t> seq,
                                              std::int64_t n) {
  std::vector<std::int64_t> best(seq.begin(), seq.end());
  for (auto& v : best) v = FloorMod(v, n);
  std::sort(best.begin(), best.end());
  std::vector<std::int64_t> image(seq.size());
  for (std::int64_t u = 1; u < n; ++u) {
    if (Gcd(u, n) != 1) continue;
    for (std::int64_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < seq.size(); ++i) {
        image[i] = FloorMod(u * FloorMod(seq[i], n) + c, n);
      }
      std::sort(image.begin(), image.end());
      if (image < best) best = image;
    }
  }
  return best;
}

std::string_view StatusName(ConjectureReport::Status status) {
  return status == ConjectureReport::Status::kVerified ? "Verified"
                                                       : "Counterexample";
}

ConjectureReport CheckConjecture(std::int64_t n,
                                 const ConjectureOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::int64_t cap =
      options.symmetry_reduction ? options.max_n + 2 : options.max_n;
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "n must be positive, got " + std::to_string(n));
  }
  if (n > cap || n > kMaxEnumerationN) {
    throw Error(ErrorCode::kTooLarge,
                "n = " + std::to_string(n) + " exceeds the sweep cap of " +
                    std::to_string(std::min(cap, kMaxEnumerationN)));
  }

  const auto all = EnumerateZeroSumSequences(n);
  std::vector<const std::vector<std::int64_t>*> lhs;
  for (const auto& a : all) {
    if (!options.symmetry_reduction || AffineCanonicalForm(a, n) == a) {
      lhs.push_back(&a);
    }
  }

  ConjectureReport report;
  report.n = n;
  report.total_pairs = static_cast<std::uint64_t>(all.size()) * all.size();
  report.reduced_pairs = static_cast<std::uint64_t>(lhs.size()) * all.size();

  const std::uint64_t width = all.size();
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> next_row{0};
  std::atomic<std::uint64_t> first_failure{kNone};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t row = next_row.fetch_add(1);
      if (row >= lhs.size() || row * width >= first_failure.load()) return;
      const auto& a = *lhs[row];
      for (std::uint64_t col = 0; col < width; ++col) {
        const std::uint64_t pair = row * width + col;
        if (pair >= first_failure.load()) break;
        if (ExistsAssignment(a, all[col], n)) continue;
        std::uint64_t seen = first_failure.load();
        while (pair < seen && !first_failure.compare_exchange_weak(seen, pair)) {
        }
        break;
      }
    }
  };

  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  const std::uint64_t failure = first_failure.load();
  if (failure == kNone) {
    report.status = ConjectureReport::Status::kVerified;
    report.pairs_examined = report.reduced_pairs;
  } else {
    report.status = ConjectureReport::Status::kCounterexample;
    report.a = *lhs[failure / width];
    report.w = all[failure % width];
    report.pairs_examined = failure + 1;
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::string CsvHeader() { return "n,status,pairs_examined,seconds"; }

std::string CsvRow(const ConjectureReport& report) {
  std::ostringstream os;
  os << report.n << ',' << StatusName(report.status) << ','
     << report.pairs_examined << ',' << report.seconds;
  return os.str();
}

std::string_view ReasonName(VerifyResult::Reason reason) {
  switch (reason) {
    case VerifyResult::Reason::kOk: return "Ok";
    case VerifyResult::Reason::kNotBijection: return "NotBijection";
    case VerifyResult::Reason::kWrongSum: return "WrongSum";
    case VerifyResult::Reason::kWrongModulus: return "WrongModulus";
  }
  return "Unknown";
}

VerifyResult VerifyCertificate(const Certificate& certificate) {
  using Reason = VerifyResult::Reason;
  const std::size_t n = certificate.instance.n();
  if (certificate.sigma.size() != n || !IsBijection(certificate.sigma)) {
    return {Reason::kNotBijection,
            "sigma is not a permutation of 1.." + std::to_string(n)};
  }
  const std::int64_t expected = certificate.weights.TargetModulus(n);
  if (expected < 1 || certificate.modulus != expected) {
    return {Reason::kWrongModulus,
            "modulus " + std::to_string(certificate.modulus) +
                " does not match the weight kind (expected " +
                std::to_string(expected) + ")"};
  }
  const BigInt recomputed = WeightedSum(certificate.instance.values,
                                        certificate.weights, certificate.sigma);
  if (recomputed != certificate.achieved_sum) {
    return {Reason::kWrongSum, "recorded sum " +
                                   certificate.achieved_sum.str() +
                                   " differs from recomputed " +
                                   recomputed.str()};
  }
  if (recomputed % certificate.modulus != 0) {
    return {Reason::kWrongSum, "sum " + recomputed.str() +
                                   " is not divisible by " +
                                   std::to_string(certificate.modulus)};
  }
  return {Reason::kOk, "ok"};
}

}  // namespace zerosum
