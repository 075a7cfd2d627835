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

// Sorted, distinct 1-based indices into a host sequence of known length.
class IndexSet {
 public:
  IndexSet() = default;

  // Sorts the indices; throws kInvalidArgument on duplicates or indices
  // outside [1, host_length].
  IndexSet(std::vector<std::size_t> indices, std::size_t host_length);

  // {first, ..., last} within a host of the given length.
  static IndexSet Range(std::size_t first, std::size_t last,
                        std::size_t host_length);

  std::span<const std::size_t> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  std::size_t host_length() const { return host_length_; }
  bool empty() const { return indices_.empty(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  bool contains(std::size_t index) const;

  // Host indices not in this set, as an IndexSet over the same host.
  IndexSet Complement() const;

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> indices_;
  std::size_t host_length_ = 0;
};

std::string ToString(const IndexSet& set);

// Values at the given 1-based indices, in index order.
template <typename T>
std::vector<T> Gather(std::span<const T> values, const IndexSet& set) {
  std::vector<T> out;
  out.reserve(set.size());
  for (std::size_t i : set) out.push_back(values[i - 1]);
  return out;
}

}  // namespace zerosum
