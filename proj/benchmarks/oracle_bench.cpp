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

#include <vector>

#include "benchmark/benchmark.h"
#include "zerosum/oracle.hpp"

namespace zerosum {
namespace {

void BM_ExistsAssignmentNatural(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::int64_t> a(n), w(n);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = static_cast<std::int64_t>((k * k + 3) % n);
    w[k] = static_cast<std::int64_t>(k + 1);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExistsAssignment(a, w, static_cast<std::int64_t>(n)));
  }
}

// a = w = Z_n; unsolvable for n = 3, solvable from n = 5 on.
void BM_ExistsAssignmentCyclic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::int64_t> a(n);
  for (std::size_t k = 0; k < n; ++k) a[k] = static_cast<std::int64_t>(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExistsAssignment(a, a, static_cast<std::int64_t>(n)));
  }
}

void BM_CheckConjecture(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(CheckConjecture(state.range(0)));
  }
}

BENCHMARK(BM_ExistsAssignmentNatural)->DenseRange(4, 16, 4);
BENCHMARK(BM_ExistsAssignmentCyclic)->DenseRange(3, 15, 4);
BENCHMARK(BM_CheckConjecture)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zerosum

BENCHMARK_MAIN();
