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

#include "zerosum/egz.hpp"

#include <string>
#include <vector>

#include "zerosum/error.hpp"
#include "zerosum/numtheory.hpp"

namespace zerosum {
namespace {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

// Fixed-width bitsets over residues [0, q), stored back to back.
class ResidueRows {
 public:
  ResidueRows(std::size_t rows, std::size_t q)
      : q_(q), words_((q + kWordBits - 1) / kWordBits), data_(rows * words_) {}

  Word* row(std::size_t r) { return data_.data() + r * words_; }
  const Word* row(std::size_t r) const { return data_.data() + r * words_; }

  bool test(std::size_t r, std::size_t bit) const {
    return (row(r)[bit / kWordBits] >> (bit % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t bit) {
    row(r)[bit / kWordBits] |= Word{1} << (bit % kWordBits);
  }

  void OrInto(std::size_t dst, std::size_t src) {
    Word* d = row(dst);
    const Word* s = row(src);
    for (std::size_t i = 0; i < words_; ++i) d[i] |= s[i];
  }

  // dst |= src rotated so that bit r moves to (r + shift) mod q.
  void OrRotatedInto(std::size_t dst, std::size_t src, std::size_t shift) {
    Word* d = row(dst);
    const Word* s = row(src);
    if (shift == 0) {
      for (std::size_t i = 0; i < words_; ++i) d[i] |= s[i];
      return;
    }
    // Low part: bits [0, q - shift) move up by shift.
    OrShiftedUp(d, s, shift);
    // High part: bits [q - shift, q) move down by q - shift.
    OrShiftedDown(d, s, q_ - shift);
    MaskTail(d);
  }

 private:
  void OrShiftedUp(Word* d, const Word* s, std::size_t shift) const {
    std::size_t ws = shift / kWordBits, bs = shift % kWordBits;
    for (std::size_t i = words_; i-- > ws;) {
      Word v = s[i - ws] << bs;
      if (bs != 0 && i - ws >= 1) v |= s[i - ws - 1] >> (kWordBits - bs);
      d[i] |= v;
    }
  }

  void OrShiftedDown(Word* d, const Word* s, std::size_t shift) const {
    std::size_t ws = shift / kWordBits, bs = shift % kWordBits;
    for (std::size_t i = 0; i + ws < words_; ++i) {
      Word v = s[i + ws] >> bs;
      if (bs != 0 && i + ws + 1 < words_) v |= s[i + ws + 1] << (kWordBits - bs);
      d[i] |= v;
    }
  }

  void MaskTail(Word* d) const {
    std::size_t tail = q_ % kWordBits;
    if (tail != 0) d[words_ - 1] &= (Word{1} << tail) - 1;
  }

  std::size_t q_;
  std::size_t words_;
  std::vector<Word> data_;
};

}  // namespace

IndexSet FindZeroSumSubset(std::span<const std::int64_t> values,
                           std::int64_t q) {
  if (q < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "subset size must be positive, got " + std::to_string(q));
  }
  const std::size_t size = static_cast<std::size_t>(q);
  if (values.size() < 2 * size - 1) {
    throw Error(ErrorCode::kInsufficientLength,
                "need at least " + std::to_string(2 * q - 1) +
                    " values for q = " + std::to_string(q) + ", got " +
                    std::to_string(values.size()));
  }
  const std::size_t len = 2 * size - 1;
  std::vector<std::size_t> residue(len);
  for (std::size_t i = 0; i < len; ++i) {
    residue[i] = static_cast<std::size_t>(FloorMod(values[i], q));
  }

  // Row (i, c): residues reachable by picking exactly c of items i..len-1.
  const std::size_t counts = size + 1;
  auto at = [counts](std::size_t i, std::size_t c) { return i * counts + c; };
  ResidueRows reach((len + 1) * counts, size);
  reach.set(at(len, 0), 0);
  for (std::size_t i = len; i-- > 0;) {
    const std::size_t remaining = len - i;
    for (std::size_t c = 0; c <= size && c <= remaining; ++c) {
      reach.OrInto(at(i, c), at(i + 1, c));
      if (c > 0) reach.OrRotatedInto(at(i, c), at(i + 1, c - 1), residue[i]);
    }
  }
  if (!reach.test(at(0, size), 0)) {
    throw Error(ErrorCode::kInternalContradiction,
                "no zero-sum subset of size " + std::to_string(q) + " found");
  }

  // Take each item as early as possible: lexicographically smallest witness.
  std::vector<std::size_t> chosen;
  chosen.reserve(size);
  std::size_t need = size, target = 0;
  for (std::size_t i = 0; i < len && need > 0; ++i) {
    std::size_t rest = (target + size - residue[i]) % size;
    if (reach.test(at(i + 1, need - 1), rest)) {
      chosen.push_back(i + 1);
      --need;
      target = rest;
    }
  }
  if (need != 0 || target != 0) {
    throw Error(ErrorCode::kInternalContradiction,
                "witness reconstruction failed for q = " + std::to_string(q));
  }
  return IndexSet(std::move(chosen), values.size());
}

}  // namespace zerosum
