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

#include "sepfaces/span_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace sepfaces {

int OracleConfig::effective_samples(int total_dim) const {
  const int floor = total_dim * total_dim;
  if (samples <= 0) return 4 * floor;
  return samples < floor ? floor : samples;
}

int OracleConfig::effective_extra(int total_dim) const {
  int extra = saturation_extra;
  if (extra <= 0) extra = (effective_samples(total_dim) + 3) / 4;
  return extra < 8 ? 8 : extra;
}

Vector hyperplane_functional(const PureState& alpha,
                             const std::vector<Vector>& factors,
                             int constrained_party) {
  const SystemShape& shape = alpha.shape();
  const int n = shape.party_count();
  if (constrained_party < 0 || constrained_party >= n)
    throw std::invalid_argument("hyperplane_functional: bad party");
  if (static_cast<int>(factors.size()) != n)
    throw std::invalid_argument("hyperplane_functional: factor count mismatch");

  Vector w = Vector::Zero(shape.dim(constrained_party));
  for (int flat = 0; flat < shape.total_dim(); ++flat) {
    std::vector<int> digits = shape.unflatten(flat);
    Complex term = std::conj(alpha.amplitudes()[flat]);
    for (int p = 0; p < n; ++p)
      if (p != constrained_party) term *= factors[p][digits[p]];
    w[digits[constrained_party]] += std::conj(term);
  }
  return w;
}

std::vector<Vector> sample_product_in_hyperplane(const PureState& alpha,
                                                 int constrained_party,
                                                 SeededRng& rng) {
  const SystemShape& shape = alpha.shape();
  const int n = shape.party_count();
  if (constrained_party < 0 || constrained_party >= n)
    throw std::invalid_argument("sample_product_in_hyperplane: bad party");

  std::vector<Vector> factors(n);
  double other_norms = 1.0;
  for (int p = 0; p < n; ++p) {
    if (p == constrained_party) continue;
    factors[p] = rng.complex_gauss_vector(shape.dim(p));
    other_norms *= factors[p].norm();
  }

  const int di = shape.dim(constrained_party);
  const Vector w = hyperplane_functional(alpha, factors, constrained_party);

  if (w.norm() > 1e-12 * alpha.norm() * other_norms) {
    // draw in the orthogonal complement of w
    for (int attempt = 0; attempt < 64; ++attempt) {
      const Vector g = rng.complex_gauss_vector(di);
      Vector projected = g - (w.dot(g) / w.squaredNorm()) * w;
      if (projected.norm() > 1e-8 * g.norm()) {
        factors[constrained_party] = std::move(projected);
        return factors;
      }
    }
    throw std::runtime_error(
        "sample_product_in_hyperplane: could not draw in the complement");
  }

  factors[constrained_party] = rng.complex_gauss_vector(di);
  return factors;
}

namespace {

RealVector vectorized_unit_projector(const std::vector<Vector>& factors) {
  const PureState product = tensor_product(factors);
  const Vector unit = product.amplitudes() / product.norm();
  return hermitian_to_real_vector(unit * unit.adjoint());
}

double gap_at_rank(const RealVector& sv, int rank) {
  if (rank <= 0 || rank >= sv.size()) return 0.0;
  const double kept = sv[rank - 1];
  if (kept <= 0.0) return 0.0;
  return sv[rank] / kept;
}

}  // namespace

OracleResult span_dim_of_family(const SystemShape& shape,
                                const ProductFamilySampler& sampler,
                                const OracleConfig& cfg) {
  const int d = shape.total_dim();
  const int samples = cfg.effective_samples(d);
  const int extra = cfg.effective_extra(d);

  RealSpanBasis basis(d * d);
  for (int i = 0; i < samples + extra; ++i) {
    SeededRng rng(derive_stream(cfg.seed, static_cast<std::uint64_t>(i)));
    const std::vector<Vector> factors =
        sampler(static_cast<std::uint64_t>(i), rng);
    const RealVector row = vectorized_unit_projector(factors);
    if (row.size() != d * d)
      throw std::invalid_argument("span_dim_of_family: sample shape mismatch");
    basis.add(row);
  }

  OracleResult result;
  result.span_rank = basis.prefix_rank(samples, cfg.rel_tol);
  result.dim = result.span_rank - 1;
  result.saturated = basis.rank(cfg.rel_tol) == result.span_rank;
  result.sv_gap = gap_at_rank(basis.singular_values(), result.span_rank);
  result.seed = cfg.seed;
  result.samples = samples;
  return result;
}

OracleResult face_dim_oracle(const PureState& alpha, const OracleConfig& cfg) {
  const int n = alpha.shape().party_count();
  const int fixed = cfg.constrained_party;
  if (fixed >= n)
    throw std::invalid_argument("face_dim_oracle: bad constrained party");
  auto sampler = [&alpha, fixed, n](std::uint64_t index, SeededRng& rng) {
    const int party = fixed >= 0 ? fixed : static_cast<int>(index % n);
    return sample_product_in_hyperplane(alpha, party, rng);
  };
  return span_dim_of_family(alpha.shape(), sampler, cfg);
}

int range_rank_oracle(const PureState& alpha, PartySubset subset,
                      const OracleConfig& cfg) {
  const SystemShape& shape = alpha.shape();
  const int d = shape.total_dim();
  const int n = shape.party_count();
  // the span lives in C^d, not in the d^2-dimensional operator space, so
  // the default budget scales with d rather than d^2
  const int samples = cfg.samples > 0 ? std::max(cfg.samples, d + 1)
                                      : 4 * d + 32;

  Matrix rows(samples, d);
  for (int i = 0; i < samples; ++i) {
    SeededRng rng(derive_stream(cfg.seed, static_cast<std::uint64_t>(i)));
    const int party =
        cfg.constrained_party >= 0 ? cfg.constrained_party : i % n;
    std::vector<Vector> factors =
        sample_product_in_hyperplane(alpha, party, rng);
    factors = partial_conjugate(std::move(factors), subset);
    const PureState conj_product = tensor_product(factors);
    rows.row(i) = conj_product.amplitudes() / conj_product.norm();
  }
  return numerical_rank(rows, cfg.rel_tol);
}

}  // namespace sepfaces
