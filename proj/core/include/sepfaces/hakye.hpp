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

#ifndef SEPFACES_HAKYE_HPP
#define SEPFACES_HAKYE_HPP

#include <array>

#include "sepfaces/span_oracle.hpp"

namespace sepfaces {

// Two families of non-induced maximal faces, reproduced numerically: a
// one-parameter 3x3 family and a four-parameter 2x4 family. Each face is
// the convex hull of an explicitly parameterized set of pure product
// states; sampling the parameters and ranking the vectorized projectors
// measures the face dimension.

/// Parameters of the 3 (x) 3 family: b > 0, b != 1, and five unit-modulus
/// phases, one tuple per extreme-point family.
struct HaKye33Params {
  double b = 0.0;
  Complex p{1, 0}, q{1, 0}, r{1, 0}, s{1, 0}, t{1, 0};
};

/// The four product-vector families of extreme points at the given
/// parameters, unnormalized:
///   psi_1 = (p, q, 1)    (x) (p, q, 1)
///   psi_2 = (0, r, √b)   (x) (0, r√b, 1)
///   psi_3 = (s√b, 0, 1)  (x) (s, 0, √b)
///   psi_4 = (t, √b, 0)   (x) (t√b, 1, 0)
std::array<PureState, 4> hakye33_vectors(const HaKye33Params& params);

struct HaKye33Dims {
  std::array<int, 4> per_family_dims{};
  int total_dim = 0;
  int face_dim = 0;
  bool saturated = false;
};

/// Span dimensions of the four families and of their union over random
/// phase draws; the face dimension is the union rank minus one.
HaKye33Dims hakye33_dims(double b, const OracleConfig& cfg = {});

/// Derived constants of the 2 (x) 4 family; requires a b > 1.
struct HaKye24Constants {
  double e = 0, f = 0, g = 0, h = 0, k = 0;
};
HaKye24Constants hakye24_constants(double a, double b, double c, double d);

struct HaKye24Params {
  double a = 0, b = 0, c = 0, d = 0;
  HaKye24Constants consts;
};
HaKye24Params hakye24_params(double a, double b, double c, double d);

/// The extreme-point product state x_alpha (x) y_alpha at sample parameter
/// alpha (the point at infinity is irrelevant for the span and excluded).
PureState hakye24_vector(const HaKye24Params& params, Complex alpha);

struct HaKye24Dim {
  int span_dim = 0;
  int face_dim = 0;
  /// span_dim <= 27 and face_dim <= 26, the established upper bounds.
  bool bound_ok = false;
  bool saturated = false;
};

/// Measured span dimension of the family over Gaussian draws of alpha.
/// Only the upper bounds are certified; the measured value is reported
/// as-is.
HaKye24Dim hakye24_dim(const HaKye24Params& params, const OracleConfig& cfg = {});

}  // namespace sepfaces

#endif
