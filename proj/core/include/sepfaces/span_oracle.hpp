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

#ifndef SEPFACES_SPAN_ORACLE_HPP
#define SEPFACES_SPAN_ORACLE_HPP

#include <cstdint>
#include <functional>

#include "sepfaces/rng.hpp"
#include "sepfaces/statespace.hpp"

namespace sepfaces {

struct OracleConfig {
  std::uint64_t seed = 0;
  /// Product-vector draws for the main rank estimate; <= 0 means 4 d^2,
  /// and explicit values are floored at d^2.
  int samples = 0;
  /// Additional draws used only to confirm the rank stopped growing;
  /// <= 0 means ceil(samples / 4); always at least 8.
  int saturation_extra = 0;
  double rel_tol = kRankTol;
  /// Party whose factor absorbs the hyperplane constraint; -1 cycles
  /// round-robin over all parties.
  int constrained_party = -1;

  int effective_samples(int total_dim) const;
  int effective_extra(int total_dim) const;
};

struct OracleResult {
  int span_rank = 0;
  /// Face dimension estimate span_rank - 1.
  int dim = -1;
  /// Rank unchanged after the extra draws.
  bool saturated = false;
  /// sigma_{r+1} / sigma_r at the rank cut; 0 when the tail vanishes.
  double sv_gap = 0.0;
  std::uint64_t seed = 0;
  int samples = 0;
};

/// The vector w on the constrained party with <alpha|zeta> = <w|zeta_i>
/// for any choice of that party's factor, the other factors held fixed.
/// factors[constrained_party] is ignored.
Vector hyperplane_functional(const PureState& alpha,
                             const std::vector<Vector>& factors,
                             int constrained_party);

/// Draw a product vector zeta in the hyperplane orthogonal to alpha: all
/// factors except `constrained_party` are Ginibre draws; that party's
/// factor is drawn in the orthogonal complement of the functional w the
/// other factors induce on it (unconstrained in the degenerate case
/// w = 0). Returns the per-party factors.
std::vector<Vector> sample_product_in_hyperplane(const PureState& alpha,
                                                 int constrained_party,
                                                 SeededRng& rng);

/// Produces the per-party factors of one product state of a family;
/// called with the sample index and a per-sample derived stream.
using ProductFamilySampler =
    std::function<std::vector<Vector>(std::uint64_t index, SeededRng& rng)>;

/// Rank of the real span of the vectorized unit projectors of sampled
/// family members, minus one. The shared pipeline behind the face oracles.
OracleResult span_dim_of_family(const SystemShape& shape,
                                const ProductFamilySampler& sampler,
                                const OracleConfig& cfg = {});

/// Monte-Carlo estimate of the dimension of the face induced by the
/// hyperplane orthogonal to alpha (span rank of sampled pure product
/// states in the hyperplane, minus one).
OracleResult face_dim_oracle(const PureState& alpha,
                             const OracleConfig& cfg = {});

/// Rank over C of the span of S-partial conjugates of sampled product
/// vectors in the hyperplane: d - 1 exactly when the transposition
/// labelled by S descends to the g.e. blocks of alpha, else d. The
/// default sample budget is 4d + 32 (the span lives in C^d); an explicit
/// cfg.samples is used as given, floored at d + 1.
int range_rank_oracle(const PureState& alpha, PartySubset subset,
                      const OracleConfig& cfg = {});

}  // namespace sepfaces

#endif
