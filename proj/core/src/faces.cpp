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

#include "sepfaces/faces.hpp"

#include <stdexcept>

namespace sepfaces {

int face_dim_formula(const GeDecomposition& decomp) {
  const long long d = decomp.shape().total_dim();
  long long prod = 1;
  for (int block_dim : decomp.block_dims()) prod *= 2LL * block_dim - 1;
  return static_cast<int>(d * d - 1 - prod);
}

int max_induced_face_dim(const SystemShape& shape) {
  const int d = shape.total_dim();
  return d * (d - 2);
}

bool is_genuinely_entangled(const PureState& state, double rel_tol) {
  return ge_decompose(state, rel_tol).block_count() == 1;
}

FaceReport face_report(const PureState& state,
                       const FaceReportOptions& options) {
  const GeDecomposition decomp = ge_decompose(state, options.oracle.rel_tol);

  FaceReport report;
  report.block_dims = decomp.block_dims();
  report.formula_dim = face_dim_formula(decomp);
  report.max_induced_dim = max_induced_face_dim(state.shape());
  report.genuinely_entangled = decomp.block_count() == 1;

  if (options.with_oracle)
    report.oracle = face_dim_oracle(state, options.oracle);

  if (options.with_theta_scan) {
    const int n = state.shape().party_count();
    std::vector<PartySubset> subsets = options.scan_subsets;
    if (subsets.empty()) {
      if (n > kThetaScanMaxParties)
        throw std::invalid_argument(
            "face_report: full theta scan needs <= 6 parties; "
            "pass an explicit subset list");
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
        subsets.push_back(PartySubset::from_bits(bits));
    }
    report.theta_scan.reserve(subsets.size());
    for (PartySubset subset : subsets)
      report.theta_scan.push_back({
          subset,
          range_rank_oracle(state, subset, options.oracle),
          theta_prime_contains(decomp, subset),
          fixes_projector(decomp, subset),
      });
  }
  return report;
}

}  // namespace sepfaces
