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

#include "sepfaces/rng.hpp"

#include <cmath>
#include <numbers>

namespace sepfaces {

double SeededRng::uniform01() {
  // 53-bit mantissa from the top bits of one 64-bit draw.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::gauss() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u = uniform01();
  while (u == 0.0) u = uniform01();
  const double v = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Complex SeededRng::complex_gauss() {
  const double re = gauss();
  const double im = gauss();
  return {re, im};
}

Vector SeededRng::complex_gauss_vector(int length) {
  Vector out(length);
  for (int i = 0; i < length; ++i) out[i] = complex_gauss();
  return out;
}

Complex SeededRng::unit_phase() {
  const double angle = 2.0 * std::numbers::pi * uniform01();
  return {std::cos(angle), std::sin(angle)};
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace sepfaces
