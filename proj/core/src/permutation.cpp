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

#include "zerosum/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "zerosum/error.hpp"
#include "zerosum/index_set.hpp"

namespace zerosum {

IndexSet::IndexSet(std::vector<std::size_t> indices, std::size_t host_length)
    : indices_(std::move(indices)), host_length_(host_length) {
  std::sort(indices_.begin(), indices_.end());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > host_length_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "index " + std::to_string(indices_[i]) + " outside [1, " +
                      std::to_string(host_length_) + "]");
    }
    if (i > 0 && indices_[i] == indices_[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate index " + std::to_string(indices_[i]));
    }
  }
}

IndexSet IndexSet::Range(std::size_t first, std::size_t last,
                         std::size_t host_length) {
  std::vector<std::size_t> idx;
  for (std::size_t i = first; i <= last; ++i) idx.push_back(i);
  return IndexSet(std::move(idx), host_length);
}

bool IndexSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

IndexSet IndexSet::Complement() const {
  std::vector<std::size_t> rest;
  rest.reserve(host_length_ - indices_.size());
  auto it = indices_.begin();
  for (std::size_t i = 1; i <= host_length_; ++i) {
    if (it != indices_.end() && *it == i) {
      ++it;
    } else {
      rest.push_back(i);
    }
  }
  return IndexSet(std::move(rest), host_length_);
}

std::string ToString(const IndexSet& set) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) os << ',';
    os << set[i];
  }
  os << '}';
  return os.str();
}

bool IsBijection(std::span<const std::size_t> images) {
  std::vector<bool> seen(images.size() + 1, false);
  for (std::size_t v : images) {
    if (v < 1 || v > images.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  if (!IsBijection(images_)) {
    throw Error(ErrorCode::kNotBijection,
                "image list is not a permutation of 1.." +
                    std::to_string(images_.size()));
  }
}

Permutation Permutation::Identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  return Permutation(std::move(images));
}

Permutation Permutation::Inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k] - 1] = k + 1;
  return Permutation(std::move(inv));
}

std::string ToString(const Permutation& sigma) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 1; k <= sigma.size(); ++k) {
    if (k > 1) os << ',';
    os << sigma(k);
  }
  os << ')';
  return os.str();
}

}  // namespace zerosum
