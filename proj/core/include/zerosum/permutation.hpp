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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace zerosum {

// A bijection sigma on [1, n], stored as its image list sigma(1..n).
// Construction validates bijectivity, so every live Permutation is valid.
class Permutation {
 public:
  Permutation() = default;

  // Throws kNotBijection unless images is a rearrangement of 1..n.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation Identity(std::size_t n);

  std::size_t size() const { return images_.size(); }

  // sigma(k) for k in [1, n].
  std::size_t operator()(std::size_t k) const { return images_[k - 1]; }

  std::span<const std::size_t> images() const { return images_; }

  Permutation Inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

// True iff images is a rearrangement of 1..images.size().
bool IsBijection(std::span<const std::size_t> images);

std::string ToString(const Permutation& sigma);

}  // namespace zerosum
