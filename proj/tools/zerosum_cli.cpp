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

// zerosum: command-line front end for the zero-sum permutation solver and
// its brute-force oracles.
//
// Exit codes: 0 success, 1 internal verification failure, 2 invalid input,
// 3 counterexample (or no assignment) found.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zerosum/egz.hpp"
#include "zerosum/error.hpp"
#include "zerosum/io.hpp"
#include "zerosum/numtheory.hpp"
#include "zerosum/oracle.hpp"
#include "zerosum/partition.hpp"
#include "zerosum/solver.hpp"

namespace {

using nlohmann::json;
using zerosum::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCounterexample = 3;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInternalContradiction:
    case ErrorCode::kPropertyViolation:
      return kExitVerifyFailed;
    default:
      return kExitInvalid;
  }
}

std::vector<std::int64_t> ParseList(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw zerosum::Error(ErrorCode::kParseError,
                           "\"" + item + "\" is not an integer");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw zerosum::Error(ErrorCode::kParseError, "empty integer list");
  }
  return out;
}

std::int64_t OracleCap(std::int64_t fallback) {
  const char* env = std::getenv("ZS_MAX_ORACLE_N");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v < 1) {
    throw zerosum::Error(ErrorCode::kInvalidArgument,
                         std::string("ZS_MAX_ORACLE_N=") + env +
                             " is not a positive integer");
  }
  return v;
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    zerosum::WriteFile(path, text);
  }
}

json Indices(const zerosum::IndexSet& set) {
  return json(std::vector<std::size_t>(set.begin(), set.end()));
}

int RunSolve(const std::string& input, const std::string& output) {
  zerosum::InstanceFile file = zerosum::ParseInstanceFile(zerosum::ReadFile(input));
  if (file.instance.n() % 2 != 0) {
    std::cerr << "error: n must be even, got " << file.instance.n() << "\n";
    return kExitInvalid;
  }
  zerosum::Certificate cert = zerosum::SolveWeighted(file.instance, file.weights);
  zerosum::VerifyResult check = zerosum::VerifyCertificate(cert);
  Emit(output, zerosum::SerializeCertificate(cert));
  if (!check) {
    std::cerr << "error: certificate failed verification: " << check.message
              << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int RunVerify(const std::string& input) {
  zerosum::Certificate cert = zerosum::ParseCertificate(zerosum::ReadFile(input));
  zerosum::VerifyResult result = zerosum::VerifyCertificate(cert);
  if (result) {
    std::cout << "ok: sum " << cert.achieved_sum << " is divisible by "
              << cert.modulus << "\n";
    return kExitOk;
  }
  std::cout << zerosum::ReasonName(result.reason) << ": " << result.message
            << "\n";
  return kExitVerifyFailed;
}

int RunEgz(const std::string& values, std::int64_t q) {
  std::vector<std::int64_t> list = ParseList(values);
  zerosum::IndexSet set = zerosum::FindZeroSumSubset(list, q);
  std::cout << json{{"q", q}, {"indices", Indices(set)}}.dump() << "\n";
  return kExitOk;
}

int RunPartition(const std::string& values, std::int64_t m, std::int64_t q,
                 std::int64_t d) {
  std::vector<std::int64_t> list = ParseList(values);
  zerosum::BlockPartition partition = zerosum::PartitionBlocks(list, m, q, d);
  json blocks = json::array();
  for (const auto& block : partition.blocks) blocks.push_back(Indices(block));
  std::cout << json{{"m", m}, {"q", q}, {"d", d}, {"blocks", blocks}}.dump()
            << "\n";
  return kExitOk;
}

int RunOracle(const std::string& values, const std::string& weights,
              std::int64_t modulus) {
  std::vector<std::int64_t> a = ParseList(values);
  std::vector<std::int64_t> w;
  if (weights.empty()) {
    for (std::size_t k = 1; k <= a.size(); ++k) w.push_back(static_cast<std::int64_t>(k));
  } else {
    w = ParseList(weights);
  }
  if (modulus == 0) modulus = static_cast<std::int64_t>(a.size());
  const auto cap = static_cast<std::size_t>(
      OracleCap(static_cast<std::int64_t>(zerosum::kDefaultMaxAssignmentN)));
  auto witness = zerosum::ExistsAssignment(a, w, modulus, cap);
  json out{{"modulus", modulus}, {"exists", witness.has_value()}};
  if (witness) {
    out["sigma"] = std::vector<std::size_t>(witness->images().begin(),
                                            witness->images().end());
  }
  std::cout << out.dump() << "\n";
  return witness ? kExitOk : kExitCounterexample;
}

std::string Join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

int RunCheckConjecture(std::int64_t n, bool symmetry, unsigned jobs,
                       const std::string& csv) {
  zerosum::ConjectureOptions options;
  options.symmetry_reduction = symmetry;
  options.jobs = jobs;
  options.max_n = OracleCap(options.max_n);
  if (n >= 8 && n <= options.max_n + (symmetry ? 2 : 0)) {
    std::cerr << "note: n = " << n << " is a long-running sweep\n";
  }
  zerosum::ConjectureReport report = zerosum::CheckConjecture(n, options);
  std::cout << "n=" << report.n << " status=" << zerosum::StatusName(report.status)
            << " pairs_examined=" << report.pairs_examined
            << " reduced_pairs=" << report.reduced_pairs
            << " total_pairs=" << report.total_pairs
            << " seconds=" << report.seconds << "\n";
  if (report.status == zerosum::ConjectureReport::Status::kCounterexample) {
    std::cout << "counterexample a=(" << Join(report.a) << ") w=("
              << Join(report.w) << ")\n";
  }
  if (!csv.empty()) {
    bool fresh = !std::filesystem::exists(csv) || std::filesystem::file_size(csv) == 0;
    std::ofstream out(csv, std::ios::app);
    if (!out) {
      throw zerosum::Error(ErrorCode::kInvalidArgument, "cannot write " + csv);
    }
    if (fresh) out << zerosum::CsvHeader() << "\n";
    out << zerosum::CsvRow(report) << "\n";
  }
  return report.status == zerosum::ConjectureReport::Status::kVerified
             ? kExitOk
             : kExitCounterexample;
}

int RunRandom(std::int64_t n, std::uint64_t seed, int count,
              std::int64_t max_abs, const std::string& out_dir) {
  if (n < 2 || n % 2 != 0) {
    std::cerr << "error: n must be even and at least 2, got " << n << "\n";
    return kExitInvalid;
  }
  if (max_abs < n) {
    std::cerr << "error: --max-abs must be at least n\n";
    return kExitInvalid;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> value(-max_abs, max_abs);
  std::uniform_int_distribution<std::int64_t> lift(-(max_abs / n) + 1, max_abs / n - 1);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    zerosum::InstanceFile file;
    auto& values = file.instance.values;
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k < n; ++k) {
      values.push_back(value(rng));
      sum = zerosum::FloorMod(sum + values.back(), n);
    }
    values.push_back(zerosum::FloorMod(-sum, n) + n * lift(rng));
    const std::string text = zerosum::SerializeInstanceFile(file);
    if (out_dir.empty()) {
      std::cout << text;
    } else {
      std::ostringstream name;
      name << "instance_" << std::setw(4) << std::setfill('0') << i << ".json";
      zerosum::WriteFile((std::filesystem::path(out_dir) / name.str()).string(),
                         text);
    }
  }
  return kExitOk;
}

int RunBench(std::int64_t max_n, int reps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> value(-1000000000, 1000000000);
  std::cout << "n,seconds_per_solve\n";
  auto run = [&](std::int64_t n) {
    std::vector<zerosum::Instance> instances(static_cast<std::size_t>(reps));
    for (auto& inst : instances) {
      std::int64_t sum = 0;
      for (std::int64_t k = 1; k < n; ++k) {
        inst.values.push_back(value(rng));
        sum = zerosum::FloorMod(sum + inst.values.back(), n);
      }
      inst.values.push_back(zerosum::FloorMod(-sum, n));
    }
    auto start = std::chrono::steady_clock::now();
    for (const auto& inst : instances) zerosum::SolveHalf(inst);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::cout << n << ',' << seconds / reps << "\n";
  };
  // Powers of two and a few mixed sizes at each scale.
  for (std::int64_t base = 8; base <= max_n; base *= 2) {
    run(base);
    if (base / 4 * 3 > base / 2 && base / 4 * 3 <= max_n) run(base / 4 * 3);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-sum permutation solver and brute-force oracles"};
  app.require_subcommand(1);

  std::string input, output, values, weights, csv, out_dir;
  std::int64_t q = 0, m = 0, d = 0, modulus = 0, n = 0, max_abs = 1000000000;
  std::int64_t max_n = 1024;
  std::uint64_t seed = 1;
  int count = 1, reps = 5;
  unsigned jobs = 1;
  bool symmetry = false;

  auto* solve = app.add_subcommand("solve", "Solve an instance file and write a certificate");
  solve->add_option("-i,--input", input, "Instance JSON")->required();
  solve->add_option("-o,--output", output, "Certificate JSON (default stdout)");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate");
  verify->add_option("-i,--input", input, "Certificate JSON")->required();

  auto* egz = app.add_subcommand("egz", "Find q values summing to 0 mod q");
  egz->add_option("--values", values, "Comma-separated integers")->required();
  egz->add_option("-q", q, "Subset size")->required();

  auto* partition = app.add_subcommand("partition", "Split indices into m blocks of size q");
  partition->add_option("--values", values, "Comma-separated integers")->required();
  partition->add_option("-m", m, "Number of blocks")->required();
  partition->add_option("-q", q, "Block size")->required();
  partition->add_option("-d", d, "Divisor of q")->required();

  auto* oracle = app.add_subcommand("oracle", "Exact search for a zero weighted sum");
  oracle->add_option("--values", values, "Comma-separated a_1..a_n")->required();
  oracle->add_option("--weights", weights, "Comma-separated w_1..w_n (default 1..n)");
  oracle->add_option("--modulus", modulus, "Modulus (default n)");

  auto* conjecture = app.add_subcommand("check-conjecture",
                                        "Sweep all zero-sum pairs over Z_n");
  conjecture->add_option("n", n, "Sequence length and modulus")->required();
  conjecture->add_flag("--symmetry", symmetry, "Reduce a modulo affine maps");
  conjecture->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  conjecture->add_option("--csv", csv, "Append a row n,status,pairs_examined,seconds");

  auto* random = app.add_subcommand("random", "Generate random zero-sum instances");
  random->add_option("--n", n, "Even length")->required();
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("--count", count, "Number of instances")->check(CLI::PositiveNumber);
  random->add_option("--max-abs", max_abs, "Bound on |value|");
  random->add_option("--out-dir", out_dir, "Write instance_NNNN.json here (default stdout)");

  auto* bench = app.add_subcommand("bench", "Time the solver against n");
  bench->add_option("--max-n", max_n, "Largest n");
  bench->add_option("--reps", reps, "Instances per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int status = app.exit(e);
    return status == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*solve) return RunSolve(input, output);
    if (*verify) return RunVerify(input);
    if (*egz) return RunEgz(values, q);
    if (*partition) return RunPartition(values, m, q, d);
    if (*oracle) return RunOracle(values, weights, modulus);
    if (*conjecture) return RunCheckConjecture(n, symmetry, jobs, csv);
    if (*random) return RunRandom(n, seed, count, max_abs, out_dir);
    if (*bench) return RunBench(max_n, reps, seed);
  } catch (const zerosum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
