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

#include <map>
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

Values Natural(std::size_t n) {
  Values w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = static_cast<std::int64_t>(k + 1);
  return w;
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST_CASE("SolveHalf examples") {
  CHECK(SolveHalf({{1, 1}}) == Permutation::Identity(2));

  Values four{0, 1, 2, 1};
  Permutation sigma4 = SolveHalf({four});
  CHECK(testing::WeightedSumMod(four, Natural(4), Images(sigma4), 2) == 0);
  CHECK(testing::WeightedSumMod(four, Natural(4), {1, 2, 3, 4}, 2) == 0);

  Values six{0, 1, 2, 3, 4, 2};
  CHECK(testing::WeightedSumMod(six, Natural(6), {1, 2, 5, 4, 3, 6}, 3) == 0);
  Permutation sigma6 = SolveHalf({six});
  CHECK(testing::WeightedSumMod(six, Natural(6), Images(sigma6), 3) == 0);
}

TEST_CASE("SolveHalf rejects invalid instances") {
  CHECK(CodeOf([] { SolveHalf({{0, 1, 2}}); }) == ErrorCode::kInvalidInstance);
  CHECK(CodeOf([] { SolveHalf({{0, 1}}); }) == ErrorCode::kInvalidInstance);
  CHECK(CodeOf([] { SolveHalf({{}}); }) == ErrorCode::kInvalidInstance);
}

TEST_CASE("SolveWeighted") {
  Values four{0, 1, 2, 1};
  // Identity with w = 0, 2, 4, 6 gives 16.
  CHECK(WeightedSum(four, WeightSpec::Progression(0, 2), std::vector<std::size_t>{1, 2, 3, 4}) == 16);

  Certificate cert = SolveWeighted({four}, WeightSpec::Progression(0, 2));
  CHECK(cert.modulus == 4);
  CHECK(cert.achieved_sum % 4 == 0);
  CHECK(cert.sigma == Images(SolveHalf({four})));
  CHECK(VerifyCertificate(cert));

  Certificate constant = SolveWeighted({Values{3, 5, -7, 7}}, WeightSpec::Progression(5, 0));
  CHECK(constant.achieved_sum == 5 * 8);

  Certificate tiny = SolveWeighted({Values{3, -3}}, WeightSpec::Natural());
  CHECK(tiny.modulus == 1);
  CHECK(tiny.achieved_sum == 3 - 6);

  CHECK(CodeOf([&] { SolveWeighted({four}, WeightSpec::Progression(0, 3)); }) ==
        ErrorCode::kOddCommonDifference);
}

TEST_CASE("InterleaveEven") {
  CHECK(Images(InterleaveEven(std::vector<std::size_t>{1, 2},
                              std::vector<std::size_t>{3, 4})) ==
        std::vector<std::size_t>{3, 1, 4, 2});
  CHECK(Images(InterleaveEven(std::vector<std::size_t>{2},
                              std::vector<std::size_t>{1})) ==
        std::vector<std::size_t>{1, 2});
  CHECK(CodeOf([] {
          InterleaveEven(std::vector<std::size_t>{1, 2},
                         std::vector<std::size_t>{2, 3});
        }) == ErrorCode::kShapeMismatch);
  CHECK(CodeOf([] {
          InterleaveEven(std::vector<std::size_t>{1},
                         std::vector<std::size_t>{2, 3});
        }) == ErrorCode::kShapeMismatch);

  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<std::size_t> all(8);
    std::iota(all.begin(), all.end(), std::size_t{1});
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::size_t> even(all.begin(), all.begin() + 4);
    std::vector<std::size_t> odd(all.begin() + 4, all.end());
    Permutation sigma = InterleaveEven(even, odd);
    for (std::size_t k = 1; k <= 4; ++k) {
      CHECK(sigma(2 * k) == even[k - 1]);
      CHECK(sigma(2 * k - 1) == odd[k - 1]);
    }
  }
}

TEST_CASE("CrtPair matches enumerated residue table") {
  // Brute force: the (s, t) with 3s + 2t = k (mod 6).
  const std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> table{
      {1, {1, 2}}, {2, {2, 1}}, {3, {1, 3}}, {4, {2, 2}}, {5, {1, 1}}, {6, {2, 3}}};
  for (std::int64_t k = 1; k <= 6; ++k) {
    std::vector<std::pair<std::int64_t, std::int64_t>> hits;
    for (std::int64_t s = 1; s <= 2; ++s) {
      for (std::int64_t t = 1; t <= 3; ++t) {
        if (testing::Mod(3 * s + 2 * t - k, 6) == 0) hits.emplace_back(s, t);
      }
    }
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == table.at(k));
    CHECK(CrtPair(k, 3, 2) == table.at(k));
  }
  for (std::int64_t q : {1, 3, 5, 9, 25, 27}) {
    for (std::int64_t m : {2, 4, 8, 14, 22}) {
      if (std::gcd(q, m) != 1) continue;
      std::vector<bool> seen(static_cast<std::size_t>(q * m), false);
      for (std::int64_t k = 1; k <= q * m; ++k) {
        auto [s, t] = CrtPair(k, q, m);
        REQUIRE(s >= 1);
        REQUIRE(s <= m);
        REQUIRE(t >= 1);
        REQUIRE(t <= q);
        REQUIRE(testing::Mod(q * s + m * t - k, q * m) == 0);
        seen[static_cast<std::size_t>((s - 1) * q + (t - 1))] = true;
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
    }
  }
  CHECK(CodeOf([] { CrtPair(1, 3, 6); }) == ErrorCode::kNotCoprime);
}

TEST_CASE("InterleaveCrt") {
  std::vector<std::vector<std::size_t>> blocks{{1, 2, 3}, {4, 5, 6}};
  Permutation sigma = InterleaveCrt(Permutation::Identity(2), blocks, 3, 2);
  // k -> (s, t) from the table above, sigma(k) = blocks[s-1][t-1].
  CHECK(Images(sigma) == std::vector<std::size_t>{2, 4, 3, 5, 1, 6});
  Permutation swapped = InterleaveCrt(Permutation({2, 1}), blocks, 3, 2);
  CHECK(Images(swapped) == std::vector<std::size_t>{5, 1, 6, 2, 4, 3});
  CHECK(CodeOf([&] { InterleaveCrt(Permutation::Identity(2), blocks, 3, 3); }) ==
        ErrorCode::kNotCoprime);
  CHECK(CodeOf([&] { InterleaveCrt(Permutation::Identity(2), {{1, 2, 3}, {1, 5, 6}}, 3, 2); }) ==
        ErrorCode::kShapeMismatch);
  CHECK(CodeOf([&] { InterleaveCrt(Permutation::Identity(3), blocks, 3, 2); }) ==
        ErrorCode::kShapeMismatch);
}

TEST_CASE("SolveHalf property sweep up to n = 200") {
  std::mt19937_64 rng(5);
  for (std::size_t n = 2; n <= 200; n += 2) {
    for (int rep = 0; rep < 4; ++rep) {
      Values values = testing::RandomZeroSumValues(n, 1000000000, rng);
      Permutation sigma = SolveHalf({values});
      auto images = Images(sigma);
      REQUIRE(testing::IsPermutationOf1ToN(images));
      REQUIRE(testing::WeightedSumMod(values, Natural(n), images,
                                      static_cast<std::int64_t>(n / 2)) == 0);
      REQUIRE(SolveHalf({values}) == sigma);
    }
  }
}

TEST_CASE("SolveHalf on structured inputs") {
  for (std::size_t n : {4u, 8u, 16u, 32u, 64u, 6u, 18u, 54u, 30u, 90u, 210u, 150u}) {
    for (std::int64_t c : {0, 1, 7}) {
      // Constant mod n and near-constant inputs exercise the single and two
      // residue class peels.
      Values values(n, c);
      values[0] += static_cast<std::int64_t>(n) * 3;
      Permutation constant = SolveHalf({values});
      REQUIRE(testing::WeightedSumMod(values, Natural(n), Images(constant),
                                      static_cast<std::int64_t>(n / 2)) == 0);
      values[1] += 1;
      values[2] -= 1;
      Permutation sigma = SolveHalf({values});
      REQUIRE(testing::WeightedSumMod(values, Natural(n), Images(sigma),
                                      static_cast<std::int64_t>(n / 2)) == 0);
    }
  }
}

TEST_CASE("SolveWeighted certificates verify and sums are exact") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> first(-5, 5);
  std::uniform_int_distribution<int> diff_pick(0, 4);
  for (std::size_t n = 2; n <= 60; n += 2) {
    Values values = testing::RandomZeroSumValues(n, 4000000000000000000, rng);
    WeightSpec weights =
        WeightSpec::Progression(first(rng), 2 * diff_pick(rng) - 4);
    Certificate cert = SolveWeighted({values}, weights);
    REQUIRE(VerifyCertificate(cert));
    REQUIRE(cert.achieved_sum == WeightedSum(values, weights, cert.sigma));
  }
}

}  // namespace
}  // namespace zerosum
