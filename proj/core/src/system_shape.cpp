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

#include "sepfaces/system_shape.hpp"

#include <stdexcept>

namespace sepfaces {

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty())
    throw std::invalid_argument("SystemShape: need at least one party");
  if (dims_.size() > 32)
    throw std::invalid_argument("SystemShape: at most 32 parties supported");
  long long total = 1;
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("SystemShape: party dim must be >= 1");
    total *= d;
    if (total > (1 << 24))
      throw std::invalid_argument("SystemShape: total dimension too large");
  }
  total_dim_ = static_cast<int>(total);
}

int SystemShape::subset_dim(PartySubset subset) const {
  int prod = 1;
  for (int p = 0; p < party_count(); ++p)
    if (subset.contains(p)) prod *= dims_[p];
  return prod;
}

int SystemShape::flatten(std::span<const int> digits) const {
  int flat = 0;
  for (int p = 0; p < party_count(); ++p) flat = flat * dims_[p] + digits[p];
  return flat;
}

std::vector<int> SystemShape::unflatten(int flat_index) const {
  std::vector<int> digits(party_count());
  for (int p = party_count() - 1; p >= 0; --p) {
    digits[p] = flat_index % dims_[p];
    flat_index /= dims_[p];
  }
  return digits;
}

int SystemShape::subset_index(std::span<const int> digits,
                              PartySubset subset) const {
  int flat = 0;
  for (int p = 0; p < party_count(); ++p)
    if (subset.contains(p)) flat = flat * dims_[p] + digits[p];
  return flat;
}

}  // namespace sepfaces
