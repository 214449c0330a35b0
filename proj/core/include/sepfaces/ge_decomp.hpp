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

#ifndef SEPFACES_GE_DECOMP_HPP
#define SEPFACES_GE_DECOMP_HPP

#include <vector>

#include "sepfaces/statespace.hpp"

namespace sepfaces {

/// One genuinely entangled factor of a pure state: the parties it covers
/// and its amplitude vector over those parties (ascending party order,
/// unit norm, first nonzero entry real positive).
struct GeBlock {
  PartySubset parties;
  Vector component;
};

/// Factorization of a pure state into genuinely entangled components, one
/// per block of the induced party partition. Blocks are ordered by their
/// smallest party; the components re-tensored in original party order and
/// scaled by global_scale reproduce the input.
class GeDecomposition {
 public:
  GeDecomposition(SystemShape shape, std::vector<GeBlock> blocks,
                  Complex global_scale);

  const SystemShape& shape() const { return shape_; }
  const std::vector<GeBlock>& blocks() const { return blocks_; }
  Complex global_scale() const { return global_scale_; }

  int block_count() const { return static_cast<int>(blocks_.size()); }
  /// Block dimensions d'_i = prod of the party dims inside each block.
  std::vector<int> block_dims() const;

 private:
  SystemShape shape_;
  std::vector<GeBlock> blocks_;
  Complex global_scale_;
};

/// True iff the state factors across the bipartition S | S^c, i.e. the
/// matricization has numerical rank 1. S must be proper and nonempty.
bool splits(const PureState& state, PartySubset subset,
            double rel_tol = kRankTol);

/// Factor the state into genuinely entangled components by repeatedly
/// peeling off the smallest splitting subset that contains the lowest
/// unassigned party (subsets enumerated by size, then lexicographically;
/// factors extracted from the dominant singular pair of the
/// matricization).
GeDecomposition ge_decompose(const PureState& state,
                             double rel_tol = kRankTol);

/// True iff v is proportional to its entrywise conjugate, decided by a
/// rank-1 test on the 2-column matrix [v, conj(v)].
bool is_real_up_to_phase(const Vector& v, double rel_tol = kRankTol);

/// True iff S is a union of whole blocks of the decomposition, i.e. the
/// partial transposition it labels descends to the coarse-grained system.
bool theta_prime_contains(const GeDecomposition& decomp, PartySubset subset);

/// True iff the partial transposition labelled by S fixes the projector
/// onto the decomposed state: S must be a block union and every component
/// transposed by it must be real up to phase.
bool fixes_projector(const GeDecomposition& decomp, PartySubset subset);

}  // namespace sepfaces

#endif
