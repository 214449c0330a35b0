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

#ifndef SEPFACES_PARTY_SUBSET_HPP
#define SEPFACES_PARTY_SUBSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sepfaces {

/// A subset S of the parties {0, ..., n-1} of a multipartite system,
/// stored as a bitmask. Doubles as the label of the partial transposition
/// operator it generates: composing two operators corresponds to the
/// symmetric difference of their subsets, so the 2^n subsets form an
/// abelian group under ^.
class PartySubset {
 public:
  constexpr PartySubset() = default;

  static constexpr PartySubset empty_set() { return PartySubset(0); }
  static constexpr PartySubset from_bits(std::uint32_t bits) {
    return PartySubset(bits);
  }
  static constexpr PartySubset full(int n_parties) {
    return PartySubset((std::uint32_t{1} << n_parties) - 1);
  }
  static PartySubset of(std::initializer_list<int> parties) {
    std::uint32_t bits = 0;
    for (int p : parties) bits |= std::uint32_t{1} << p;
    return PartySubset(bits);
  }

  constexpr bool contains(int party) const {
    return (bits_ >> party & 1u) != 0;
  }
  constexpr PartySubset with(int party) const {
    return PartySubset(bits_ | std::uint32_t{1} << party);
  }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool is_full(int n_parties) const {
    return bits_ == full(n_parties).bits_;
  }
  constexpr bool is_proper_nonempty(int n_parties) const {
    return !is_empty() && !is_full(n_parties);
  }
  constexpr PartySubset complement(int n_parties) const {
    return PartySubset(~bits_ & full(n_parties).bits_);
  }
  constexpr bool is_subset_of(PartySubset other) const {
    return (bits_ & other.bits_) == bits_;
  }
  constexpr bool intersects(PartySubset other) const {
    return (bits_ & other.bits_) != 0;
  }

  // group law of partial transpositions: composition = symmetric difference
  friend constexpr PartySubset operator^(PartySubset a, PartySubset b) {
    return PartySubset(a.bits_ ^ b.bits_);
  }

  friend constexpr bool operator==(PartySubset, PartySubset) = default;
  friend constexpr auto operator<=>(PartySubset, PartySubset) = default;

  /// Member parties in ascending order.
  std::vector<int> members() const {
    std::vector<int> out;
    for (int p = 0; p < 32; ++p)
      if (contains(p)) out.push_back(p);
    return out;
  }

 private:
  constexpr explicit PartySubset(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

}  // namespace sepfaces

#endif
