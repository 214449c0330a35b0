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

#include <gtest/gtest.h>

#include "sepfaces/faces.hpp"
#include "test_util.hpp"

namespace sepfaces {
namespace {

using test::make_vector;

TEST(HaKye33Vectors, SubstitutionAtKnownParameters) {
  HaKye33Params params;
  params.b = 4.0;
  const auto states = hakye33_vectors(params);

  // second family at r = 1: (0,1,2) (x) (0,2,1)
  const Vector expected =
      tensor_product({make_vector({0, 1, 2}), make_vector({0, 2, 1})})
          .amplitudes();
  EXPECT_NEAR((states[1].amplitudes() - expected).norm(), 0.0, 1e-14);

  // first family at p = q = 1: (1,1,1) (x) (1,1,1)
  const Vector ones = tensor_product({make_vector({1, 1, 1}),
                                      make_vector({1, 1, 1})})
                          .amplitudes();
  EXPECT_NEAR((states[0].amplitudes() - ones).norm(), 0.0, 1e-14);
}

TEST(HaKye33Vectors, ParameterValidation) {
  HaKye33Params params;
  params.b = 1.0;
  EXPECT_THROW(hakye33_vectors(params), std::invalid_argument);
  params.b = 0.0;
  EXPECT_THROW(hakye33_vectors(params), std::invalid_argument);
  params.b = -2.0;
  EXPECT_THROW(hakye33_vectors(params), std::invalid_argument);
  params.b = 2.0;
  params.p = Complex{2, 0};  // not unit modulus
  EXPECT_THROW(hakye33_vectors(params), std::invalid_argument);
}

TEST(HaKye33Dims, ReferenceParameters) {
  const HaKye33Dims dims = hakye33_dims(2.0, {});
  EXPECT_EQ(dims.per_family_dims, (std::array<int, 4>{19, 5, 5, 5}));
  EXPECT_EQ(dims.total_dim, 28);
  EXPECT_EQ(dims.face_dim, 27);
  EXPECT_TRUE(dims.saturated);
}

TEST(HaKye33Dims, ParameterGenericInB) {
  for (double b : {1.0 / 3.0, 0.5, 2.0, 3.0, 5.0}) {
    const HaKye33Dims dims = hakye33_dims(b, {});
    EXPECT_EQ(dims.per_family_dims, (std::array<int, 4>{19, 5, 5, 5}))
        << "b = " << b;
    EXPECT_EQ(dims.total_dim, 28) << "b = " << b;
    EXPECT_EQ(dims.face_dim, 27) << "b = " << b;
  }
}

TEST(HaKye33Dims, StaysBelowInducedMaximum) {
  const HaKye33Dims dims = hakye33_dims(3.0, {});
  EXPECT_EQ(dims.face_dim, 27);
  EXPECT_LT(dims.face_dim, max_induced_face_dim(SystemShape({3, 3})));
}

TEST(HaKye24Constants, Substitution) {
  const HaKye24Constants c = hakye24_constants(2, 1, 1, 1);
  EXPECT_DOUBLE_EQ(c.e, 4.0);
  EXPECT_DOUBLE_EQ(c.f, 4.0);
  EXPECT_DOUBLE_EQ(c.g, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(c.h, 3.0);
  EXPECT_DOUBLE_EQ(c.k, 3.0);

  const HaKye24Constants c2 = hakye24_constants(1, 2, 1, 1);
  EXPECT_DOUBLE_EQ(c2.e, 2.0);
  EXPECT_DOUBLE_EQ(c2.f, 2.0);
  EXPECT_DOUBLE_EQ(c2.g, 1.0);  // sqrt(a c d) with a c d = 1
  EXPECT_DOUBLE_EQ(c2.h, 3.0);
  EXPECT_DOUBLE_EQ(c2.k, 3.0);
}

TEST(HaKye24Constants, RequiresAbAboveOne) {
  EXPECT_THROW(hakye24_constants(1, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(hakye24_constants(0.5, 1.5, 1, 1), std::invalid_argument);
  EXPECT_THROW(hakye24_constants(2, 1, -1, 1), std::invalid_argument);
}

TEST(HaKye24Vector, SubstitutionAtZeroAndOne) {
  const HaKye24Params params = hakye24_params(2, 1, 1, 1);

  const PureState at_zero = hakye24_vector(params, Complex{0, 0});
  const Vector expected_zero =
      tensor_product({make_vector({1, 0}), make_vector({0, 0, -4, 0})})
          .amplitudes();
  EXPECT_NEAR((at_zero.amplitudes() - expected_zero).norm(), 0.0, 1e-13);

  const PureState at_one = hakye24_vector(params, Complex{1, 0});
  const Vector expected_one =
      tensor_product({make_vector({1, 1}), make_vector({0, 4, -8, -2})})
          .amplitudes();
  EXPECT_NEAR((at_one.amplitudes() - expected_one).norm(), 0.0, 1e-13);
}

TEST(HaKye24Vector, NonzeroOnRandomGrid) {
  const HaKye24Params params = hakye24_params(2, 1.5, 0.5, 1);
  SeededRng rng(9);
  for (int it = 0; it < 100; ++it) {
    const PureState state = hakye24_vector(params, rng.complex_gauss());
    EXPECT_GT(state.norm(), 0.0);
  }
}

TEST(HaKye24Dim, BoundsHoldAtReferenceParameters) {
  const HaKye24Dim dim = hakye24_dim(hakye24_params(2, 1, 1, 1), {});
  EXPECT_TRUE(dim.bound_ok);
  EXPECT_LE(dim.span_dim, 27);
  EXPECT_LE(dim.face_dim, 26);
  EXPECT_TRUE(dim.saturated);
  EXPECT_LT(dim.face_dim, max_induced_face_dim(SystemShape({2, 4})));
}

TEST(HaKyeDims, StableUnderDoubledSamples) {
  OracleConfig cfg;
  cfg.seed = 29;
  const HaKye33Dims once33 = hakye33_dims(2.0, cfg);
  cfg.samples = 2 * 4 * 81;
  const HaKye33Dims twice33 = hakye33_dims(2.0, cfg);
  EXPECT_EQ(once33.total_dim, twice33.total_dim);
  EXPECT_EQ(once33.per_family_dims, twice33.per_family_dims);
  EXPECT_TRUE(twice33.saturated);

  cfg.samples = 0;
  const HaKye24Dim once24 = hakye24_dim(hakye24_params(2, 1, 1, 1), cfg);
  cfg.samples = 2 * 4 * 64;
  const HaKye24Dim twice24 = hakye24_dim(hakye24_params(2, 1, 1, 1), cfg);
  EXPECT_EQ(once24.span_dim, twice24.span_dim);
  EXPECT_TRUE(twice24.saturated);
}

TEST(HaKye24Dim, BoundsHoldAcrossParameters) {
  SeededRng rng(19);
  for (int it = 0; it < 4; ++it) {
    const double a = 1.0 + rng.uniform01() * 2.0;
    const double b = 1.0 / a + 0.5 + rng.uniform01();
    const double c = 0.25 + rng.uniform01();
    const double d = 0.25 + rng.uniform01();
    const HaKye24Dim dim = hakye24_dim(hakye24_params(a, b, c, d), {});
    EXPECT_TRUE(dim.bound_ok) << "a=" << a << " b=" << b << " c=" << c
                              << " d=" << d;
  }
}

}  // namespace
}  // namespace sepfaces
