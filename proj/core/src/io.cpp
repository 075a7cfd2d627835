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

#include "zerosum/io.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "zerosum/error.hpp"

namespace zerosum {
namespace {

using nlohmann::json;

constexpr std::int64_t kExactDoubleLimit = std::int64_t{1} << 53;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, where + ": " + what);
}

json ParseDocument(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    Fail("line " + std::to_string(line) + ", column " + std::to_string(column),
         "malformed JSON");
  }
}

const json& Field(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) Fail(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) Fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

bool IsDecimal(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt ToBigInt(const json& value, const std::string& where) {
  if (value.is_number_unsigned()) return BigInt(value.get<std::uint64_t>());
  if (value.is_number_integer()) return BigInt(value.get<std::int64_t>());
  if (value.is_string()) {
    std::string s = value.get<std::string>();
    if (!IsDecimal(s)) Fail(where, "\"" + s + "\" is not a decimal integer");
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s);
  }
  Fail(where, "expected an integer");
}

std::int64_t ToInt64(const json& value, const std::string& where) {
  BigInt big = ToBigInt(value, where);
  if (big > std::numeric_limits<std::int64_t>::max() ||
      big < std::numeric_limits<std::int64_t>::min()) {
    Fail(where, "integer " + big.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(big);
}

json FromBigInt(const BigInt& value) {
  if (value > kExactDoubleLimit || value < -kExactDoubleLimit) return value.str();
  return static_cast<std::int64_t>(value);
}

json FromInt64(std::int64_t value) { return FromBigInt(BigInt(value)); }

Instance ReadInstance(const json& doc) {
  const std::int64_t n = ToInt64(Field(doc, "n", "document"), "n");
  const json& values = Field(doc, "values", "document");
  if (!values.is_array()) Fail("values", "expected an array");
  if (n < 0 || values.size() != static_cast<std::size_t>(n)) {
    Fail("values", "has " + std::to_string(values.size()) +
                       " entries but n = " + std::to_string(n));
  }
  Instance instance;
  instance.values.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    instance.values.push_back(
        ToInt64(values[i], "values[" + std::to_string(i) + "]"));
  }
  return instance;
}

WeightSpec ReadWeights(const json& doc) {
  if (!doc.is_object() || !doc.contains("weights")) return WeightSpec::Natural();
  const json& weights = doc["weights"];
  const json& kind = Field(weights, "kind", "weights");
  if (!kind.is_string()) Fail("weights.kind", "expected a string");
  const std::string name = kind.get<std::string>();
  if (name == "natural") return WeightSpec::Natural();
  if (name != "ap") {
    Fail("weights.kind", "unknown kind \"" + name + "\" (natural or ap)");
  }
  const std::int64_t first = ToInt64(Field(weights, "first", "weights"),
                                     "weights.first");
  const std::int64_t diff = ToInt64(Field(weights, "diff", "weights"),
                                    "weights.diff");
  if (diff % 2 != 0) {
    Fail("weights.diff", "common difference " + std::to_string(diff) +
                             " must be even");
  }
  return WeightSpec::Progression(first, diff);
}

json WriteWeights(const WeightSpec& weights) {
  if (weights.kind == WeightSpec::Kind::kNatural) return {{"kind", "natural"}};
  return {{"kind", "ap"},
          {"first", FromInt64(weights.first)},
          {"diff", FromInt64(weights.diff)}};
}

json WriteInstance(const Instance& instance, const WeightSpec& weights) {
  json values = json::array();
  for (std::int64_t v : instance.values) values.push_back(FromInt64(v));
  return {{"n", instance.n()}, {"values", values},
          {"weights", WriteWeights(weights)}};
}

}  // namespace

InstanceFile ParseInstanceFile(const std::string& text) {
  json doc = ParseDocument(text);
  if (!doc.is_object()) Fail("document", "expected an object");
  return {ReadInstance(doc), ReadWeights(doc)};
}

std::string SerializeInstanceFile(const InstanceFile& file) {
  return WriteInstance(file.instance, file.weights).dump() + "\n";
}

Certificate ParseCertificate(const std::string& text) {
  json doc = ParseDocument(text);
  if (!doc.is_object()) Fail("document", "expected an object");
  Certificate cert;
  cert.instance = ReadInstance(doc);
  cert.weights = ReadWeights(doc);
  const json& sigma = Field(doc, "sigma", "document");
  if (!sigma.is_array()) Fail("sigma", "expected an array");
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const std::string where = "sigma[" + std::to_string(i) + "]";
    std::int64_t v = ToInt64(sigma[i], where);
    if (v < 1) Fail(where, "images are 1-based, got " + std::to_string(v));
    cert.sigma.push_back(static_cast<std::size_t>(v));
  }
  cert.achieved_sum = ToBigInt(Field(doc, "achieved_sum", "document"),
                               "achieved_sum");
  cert.modulus = ToInt64(Field(doc, "modulus", "document"), "modulus");
  return cert;
}

std::string SerializeCertificate(const Certificate& certificate) {
  json doc = WriteInstance(certificate.instance, certificate.weights);
  doc["sigma"] = certificate.sigma;
  doc["achieved_sum"] = FromBigInt(certificate.achieved_sum);
  doc["modulus"] = certificate.modulus;
  return doc.dump() + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << contents;
  if (!out) throw Error(ErrorCode::kInvalidArgument, "write failed: " + path);
}

}  // namespace zerosum
