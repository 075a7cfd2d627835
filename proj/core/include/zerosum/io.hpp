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

// JSON documents exchanged by the command-line tool.
//
// Instance file:
//   {"n": 4, "values": [0, 1, 2, 1],
//    "weights": {"kind": "natural"} | {"kind": "ap", "first": 0, "diff": 2}}
// "weights" defaults to natural.
//
// Certificate file: the instance fields plus
//   "sigma": [1-based images], "achieved_sum": int, "modulus": int
//
// Integers whose magnitude exceeds 2^53 are written as decimal strings;
// readers accept either form everywhere.

#include <string>

#include "zerosum/solver.hpp"

namespace zerosum {

struct InstanceFile {
  Instance instance;
  WeightSpec weights;
};

// Throws kParseError with the byte offset or field path of the problem.
// Structural checks only (n matches length, diff even); zero-sum and parity
// are left to ValidateInstance.
InstanceFile ParseInstanceFile(const std::string& text);
std::string SerializeInstanceFile(const InstanceFile& file);

Certificate ParseCertificate(const std::string& text);
std::string SerializeCertificate(const Certificate& certificate);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace zerosum
