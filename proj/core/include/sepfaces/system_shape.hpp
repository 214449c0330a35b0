// Copyright 2026 The sepfaces developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEPFACES_SYSTEM_SHAPE_HPP
#define SEPFACES_SYSTEM_SHAPE_HPP

#include <span>
#include <vector>

#include "sepfaces/party_subset.hpp"

namespace sepfaces {

/// Party dimensions (d_1, ..., d_n) of a multipartite system together with
/// the lexicographic flattening of multi-indices: party 1 is the most
/// significant digit, so |j_1, ..., j_n> sits at flat index
/// ((j_1 d_2 + j_2) d_3 + ...) + j_n. Every module shares this layout.
class SystemShape {
 public:
  explicit SystemShape(std::vector<int> dims);

  int party_count() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_[party]; }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const { return total_dim_; }

  /// Product of the dims of the parties in S (1 for the empty set).
  int subset_dim(PartySubset subset) const;

  int flatten(std::span<const int> digits) const;
  std::vector<int> unflatten(int flat_index) const;

  /// Flat index of the sub-multi-index formed by the digits of the parties
  /// in `subset`, taken in ascending party order.
  int subset_index(std::span<const int> digits, PartySubset subset) const;

  friend bool operator==(const SystemShape&, const SystemShape&) = default;

 private:
  std::vector<int> dims_;
  int total_dim_ = 0;
};

}  // namespace sepfaces

#endif
