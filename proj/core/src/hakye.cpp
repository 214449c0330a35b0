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

#include "sepfaces/hakye.hpp"

#include <cmath>
#include <stdexcept>

namespace sepfaces {

namespace {

void check_33_parameter(double b) {
  if (b <= 0.0 || b == 1.0)
    throw std::invalid_argument("hakye33: need b > 0 and b != 1");
}

Vector triple(Complex a0, Complex a1, Complex a2) {
  Vector v(3);
  v << a0, a1, a2;
  return v;
}

std::vector<Vector> hakye33_family_factors(int family, double b, Complex phase) {
  const double rb = std::sqrt(b);
  switch (family) {
    case 0:
      // psi_1 uses two independent phases; callers pass them separately
      throw std::logic_error("hakye33: family 0 needs two phases");
    case 1:
      return {triple(0, phase, rb), triple(0, phase * rb, 1)};
    case 2:
      return {triple(phase * rb, 0, 1), triple(phase, 0, rb)};
    case 3:
      return {triple(phase, rb, 0), triple(phase * rb, 1, 0)};
    default:
      throw std::logic_error("hakye33: bad family index");
  }
}

}  // namespace

std::array<PureState, 4> hakye33_vectors(const HaKye33Params& params) {
  check_33_parameter(params.b);
  for (Complex phase : {params.p, params.q, params.r, params.s, params.t})
    if (std::abs(std::abs(phase) - 1.0) > 1e-12)
      throw std::invalid_argument("hakye33: phases must have modulus 1");

  const Complex p = params.p, q = params.q;
  return {
      tensor_product({triple(p, q, 1), triple(p, q, 1)}),
      tensor_product(hakye33_family_factors(1, params.b, params.r)),
      tensor_product(hakye33_family_factors(2, params.b, params.s)),
      tensor_product(hakye33_family_factors(3, params.b, params.t)),
  };
}

HaKye33Dims hakye33_dims(double b, const OracleConfig& cfg) {
  check_33_parameter(b);
  const SystemShape shape({3, 3});

  auto family_sampler = [b](int family) {
    return [b, family](std::uint64_t, SeededRng& rng) -> std::vector<Vector> {
      if (family == 0) {
        const Complex p = rng.unit_phase();
        const Complex q = rng.unit_phase();
        return {triple(p, q, 1), triple(p, q, 1)};
      }
      return hakye33_family_factors(family, b, rng.unit_phase());
    };
  };

  HaKye33Dims out;
  OracleConfig per_family = cfg;
  RealSpanBasis all_rows(shape.total_dim() * shape.total_dim());
  const int samples = cfg.effective_samples(shape.total_dim());
  const int extra = cfg.effective_extra(shape.total_dim());

  bool families_saturated = true;
  for (int family = 0; family < 4; ++family) {
    per_family.seed = derive_stream(cfg.seed, 0xfa000000ull + family);
    const OracleResult result =
        span_dim_of_family(shape, family_sampler(family), per_family);
    out.per_family_dims[family] = result.span_rank;
    families_saturated = families_saturated && result.saturated;
  }

  // union span: interleave draws from the four families
  for (int i = 0; i < samples + extra; ++i) {
    const int family = i % 4;
    SeededRng rng(derive_stream(cfg.seed, 0xfb000000ull + i));
    const std::vector<Vector> factors = family_sampler(family)(i, rng);
    const PureState product = tensor_product(factors);
    const Vector unit = product.amplitudes() / product.norm();
    all_rows.add(hermitian_to_real_vector(unit * unit.adjoint()));
  }
  out.total_dim = all_rows.prefix_rank(samples, cfg.rel_tol);
  out.face_dim = out.total_dim - 1;
  out.saturated =
      families_saturated && all_rows.rank(cfg.rel_tol) == out.total_dim;
  return out;
}

HaKye24Constants hakye24_constants(double a, double b, double c, double d) {
  if (!(a > 0 && b > 0 && c > 0 && d > 0))
    throw std::invalid_argument("hakye24: parameters must be positive");
  if (a * b <= 1.0)
    throw std::invalid_argument("hakye24: family needs a b > 1");
  HaKye24Constants out;
  out.e = a * c * (c + d) / (a * b - 1.0);
  out.f = a * d * (c + d) / (a * b - 1.0);
  out.g = std::sqrt(a * c * d);
  out.h = b * out.e - c * c;
  out.k = b * out.f - d * d;
  return out;
}

HaKye24Params hakye24_params(double a, double b, double c, double d) {
  return {a, b, c, d, hakye24_constants(a, b, c, d)};
}

PureState hakye24_vector(const HaKye24Params& params, Complex alpha) {
  const auto& [e, f, g, h, k] = params.consts;
  const double c = params.c, d = params.d;
  const Complex conj_alpha = std::conj(alpha);
  const double abs2 = std::norm(alpha);

  Vector x(2);
  x << Complex{1, 0}, conj_alpha;

  Vector y(4);
  y << g * alpha * (1.0 - alpha),
      alpha * (h - c * d * (alpha + conj_alpha) + k * abs2),
      Complex{-e - f * abs2, 0},
      -conj_alpha * (c + d * alpha);

  return tensor_product({x, y});
}

HaKye24Dim hakye24_dim(const HaKye24Params& params, const OracleConfig& cfg) {
  hakye24_constants(params.a, params.b, params.c, params.d);  // validates
  const SystemShape shape({2, 4});

  const int samples = cfg.effective_samples(shape.total_dim());
  const int extra = cfg.effective_extra(shape.total_dim());
  RealSpanBasis rows(shape.total_dim() * shape.total_dim());
  for (int i = 0; i < samples + extra; ++i) {
    SeededRng rng(derive_stream(cfg.seed, static_cast<std::uint64_t>(i)));
    const PureState state = hakye24_vector(params, rng.complex_gauss());
    const Vector unit = state.amplitudes() / state.norm();
    rows.add(hermitian_to_real_vector(unit * unit.adjoint()));
  }

  HaKye24Dim out;
  out.span_dim = rows.prefix_rank(samples, cfg.rel_tol);
  out.face_dim = out.span_dim - 1;
  out.bound_ok = out.span_dim <= 27 && out.face_dim <= 26;
  out.saturated = rows.rank(cfg.rel_tol) == out.span_dim;
  return out;
}

}  // namespace sepfaces
