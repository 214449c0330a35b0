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

#ifndef SEPFACES_FACES_HPP
#define SEPFACES_FACES_HPP

#include <optional>
#include <vector>

#include "sepfaces/ge_decomp.hpp"
#include "sepfaces/span_oracle.hpp"

namespace sepfaces {

/// dim F_V = d^2 - 1 - prod_i (2 d'_i - 1), where the d'_i are the g.e.
/// block dimensions of the vector spanning V^perp.
int face_dim_formula(const GeDecomposition& decomp);

/// d (d - 2): the largest dimension an induced maximal face can have;
/// attained exactly by hyperplanes orthogonal to genuinely entangled
/// vectors.
int max_induced_face_dim(const SystemShape& shape);

/// True iff the state is entangled across every bipartition (single block
/// decomposition); single-party vectors count as genuinely entangled.
bool is_genuinely_entangled(const PureState& state, double rel_tol = kRankTol);

struct ThetaScanEntry {
  PartySubset subset;
  int range_rank = 0;
  bool in_theta_prime = false;
  bool fixes_face = false;
};

struct FaceReportOptions {
  bool with_oracle = false;
  bool with_theta_scan = false;
  /// Subsets to scan; required when the system has more than
  /// kThetaScanMaxParties parties, ignored otherwise.
  std::vector<PartySubset> scan_subsets;
  OracleConfig oracle;
};

/// Full 2^n theta scans are capped at this party count.
inline constexpr int kThetaScanMaxParties = 6;

struct FaceReport {
  std::vector<int> block_dims;
  int formula_dim = 0;
  int max_induced_dim = 0;
  bool genuinely_entangled = false;
  std::optional<OracleResult> oracle;
  std::vector<ThetaScanEntry> theta_scan;
};

/// Formula dimension always; Monte-Carlo confirmation and the scan over
/// partial transpositions on request.
FaceReport face_report(const PureState& state,
                       const FaceReportOptions& options = {});

}  // namespace sepfaces

#endif
