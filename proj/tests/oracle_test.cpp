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

#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "zerosum/error.hpp"
#include "zerosum/oracle.hpp"
#include "zerosum/solver.hpp"

namespace zerosum {
namespace {

using Values = std::vector<std::int64_t>;

std::vector<std::size_t> Images(const Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

TEST_CASE("ExistsAssignment examples") {
  CHECK_FALSE(ExistsAssignment(Values{0, 1, 2}, Values{0, 1, 2}, 3).has_value());
  auto sums = testing::AllPermutationSums({0, 1, 2}, {0, 1, 2}, 3);
  CHECK(sums.size() == 6);
  CHECK(std::count(sums.begin(), sums.end(), 0) == 0);

  auto zeros = ExistsAssignment(Values{0, 0, 0, 0}, Values{3, 1, 4, 1}, 4);
  REQUIRE(zeros.has_value());
  CHECK(*zeros == Permutation::Identity(4));

  auto natural = ExistsAssignment(Values{0, 1, 2, 1}, Values{1, 2, 3, 4}, 2);
  REQUIRE(natural.has_value());
  CHECK(*natural == Permutation::Identity(4));
}

TEST_CASE("ExistsAssignment limits") {
  Values big(21, 0);
  try {
    ExistsAssignment(big, big, 5);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooLarge);
  }
  CHECK_THROWS_AS(ExistsAssignment(Values{1, 2}, Values{1}, 2), Error);
  CHECK_THROWS_AS(ExistsAssignment(Values{1, 2}, Values{1, 2}, 0), Error);
  CHECK(ExistsAssignment(Values(6, 1), Values(6, 1), 2, 6).has_value());
  CHECK_THROWS_AS(ExistsAssignment(Values(7, 1), Values(7, 1), 2, 6), Error);
}

TEST_CASE("ExistsAssignment agrees with n! enumeration") {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::int64_t modulus = 1; modulus <= 9; ++modulus) {
      std::uniform_int_distribution<std::int64_t> dist(-20, 20);
      for (int rep = 0; rep < 40; ++rep) {
        Values a(n), w(n);
        for (auto& v : a) v = dist(rng);
        for (auto& v : w) v = dist(rng);
        auto fast = ExistsAssignment(a, w, modulus);
        auto sums = testing::AllPermutationSums(a, w, modulus);
        bool any = std::count(sums.begin(), sums.end(), 0) > 0;
        REQUIRE(fast.has_value() == any);
        REQUIRE(ExistsAssignmentNaive(a, w, modulus).has_value() == any);
        if (fast) {
          REQUIRE(testing::WeightedSumMod(a, w, Images(*fast), modulus) == 0);
        }
      }
    }
  }
}

TEST_CASE("EnumerateZeroSumSequences") {
  CHECK(EnumerateZeroSumSequences(1) == std::vector<Values>{{0}});
  CHECK(EnumerateZeroSumSequences(2) == std::vector<Values>{{0, 0}, {1, 1}});
  CHECK(EnumerateZeroSumSequences(3) ==
        std::vector<Values>{{0, 0, 0}, {0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
  // Counts from filtering all multisets by brute force.
  const std::size_t counts[] = {1, 2, 4, 10, 26, 80, 246, 810};
  for (std::int64_t n = 1; n <= 8; ++n) {
    auto seqs = EnumerateZeroSumSequences(n);
    CHECK(seqs.size() == counts[n - 1]);
    CHECK(std::is_sorted(seqs.begin(), seqs.end()));
    for (const auto& s : seqs) {
      CHECK(std::is_sorted(s.begin(), s.end()));
      CHECK(std::accumulate(s.begin(), s.end(), std::int64_t{0}) % n == 0);
    }
  }
  CHECK_THROWS_AS(EnumerateZeroSumSequences(11), Error);
}

TEST_CASE("Affine symmetry preserves existence") {
  std::mt19937_64 rng(4);
  auto seqs = EnumerateZeroSumSequences(4);
  std::uniform_int_distribution<std::size_t> pick(0, seqs.size() - 1);
  const std::int64_t units[] = {1, 3};
  for (int rep = 0; rep < 200; ++rep) {
    const Values& a = seqs[pick(rng)];
    const Values& w = seqs[pick(rng)];
    bool base = ExistsAssignment(a, w, 4).has_value();
    for (std::int64_t u : units) {
      for (std::int64_t c = 0; c < 4; ++c) {
        Values moved(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) moved[i] = (u * a[i] + c) % 4;
        REQUIRE(ExistsAssignment(moved, w, 4).has_value() == base);
      }
    }
  }
  CHECK(AffineCanonicalForm(Values{1, 1, 1, 1}, 4) == Values{0, 0, 0, 0});
  CHECK(AffineCanonicalForm(Values{1, 2, 3, 2}, 4) == Values{0, 0, 1, 3});
}

TEST_CASE("CheckConjecture small n") {
  for (std::int64_t n : {1, 2, 4, 6}) {
    ConjectureReport report = CheckConjecture(n);
    CHECK(report.status == ConjectureReport::Status::kVerified);
    CHECK(report.pairs_examined == report.total_pairs);
  }

  ConjectureReport three = CheckConjecture(3);
  REQUIRE(three.status == ConjectureReport::Status::kCounterexample);
  CHECK(three.a == Values{0, 1, 2});
  CHECK(three.w == Values{0, 1, 2});
  CHECK(three.pairs_examined == 6);

  // First failing pair in canonical order, found by Python brute force.
  ConjectureReport five = CheckConjecture(5);
  REQUIRE(five.status == ConjectureReport::Status::kCounterexample);
  CHECK(five.a == Values{0, 0, 0, 1, 4});
  CHECK(five.w == Values{0, 1, 2, 3, 4});
  CHECK(five.pairs_examined == 36);
  CHECK_FALSE(ExistsAssignmentNaive(five.a, five.w, 5).has_value());
}

TEST_CASE("CheckConjecture options") {
  ConjectureOptions reduced;
  reduced.symmetry_reduction = true;
  ConjectureReport r4 = CheckConjecture(4, reduced);
  CHECK(r4.status == ConjectureReport::Status::kVerified);
  CHECK(r4.reduced_pairs < r4.total_pairs);
  CHECK(CheckConjecture(3, reduced).status ==
        ConjectureReport::Status::kCounterexample);

  ConjectureOptions threaded;
  threaded.jobs = 3;
  ConjectureReport t5 = CheckConjecture(5, threaded);
  CHECK(t5.a == Values{0, 0, 0, 1, 4});
  CHECK(t5.pairs_examined == 36);

  try {
    CheckConjecture(9);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooLarge);
  }
  CHECK_THROWS_AS(CheckConjecture(100, reduced), Error);
  CHECK(CsvHeader() == "n,status,pairs_examined,seconds");
  CHECK(CsvRow(CheckConjecture(2)).rfind("2,Verified,4,", 0) == 0);
}

TEST_CASE("VerifyCertificate diagnostics") {
  Instance instance{{0, 1, 2, 3, 4, 2}};
  Certificate cert;
  cert.instance = instance;
  cert.weights = WeightSpec::Natural();
  cert.sigma = {1, 2, 5, 4, 3, 6};
  cert.achieved_sum = 48;
  cert.modulus = 3;
  CHECK(VerifyCertificate(cert).reason == VerifyResult::Reason::kOk);

  Certificate wrong_sum = cert;
  wrong_sum.achieved_sum = 47;
  CHECK(VerifyCertificate(wrong_sum).reason == VerifyResult::Reason::kWrongSum);

  Certificate not_bijection = cert;
  not_bijection.sigma[1] = not_bijection.sigma[0];
  CHECK(VerifyCertificate(not_bijection).reason ==
        VerifyResult::Reason::kNotBijection);

  Certificate short_sigma = cert;
  short_sigma.sigma.pop_back();
  CHECK(VerifyCertificate(short_sigma).reason ==
        VerifyResult::Reason::kNotBijection);

  Certificate wrong_modulus = cert;
  wrong_modulus.modulus = 6;
  CHECK(VerifyCertificate(wrong_modulus).reason ==
        VerifyResult::Reason::kWrongModulus);

  // Correctly recorded but not divisible: sum 1*0 + 2*1 + ... with identity
  // is 0+2+6+12+20+12 = 52.
  Certificate off = cert;
  off.sigma = {1, 2, 3, 4, 5, 6};
  off.achieved_sum = 52;
  CHECK(VerifyCertificate(off).reason == VerifyResult::Reason::kWrongSum);

  CHECK(VerifyCertificate(SolveWeighted(instance, WeightSpec::Natural())));
}

}  // namespace
}  // namespace zerosum
