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

#ifndef SEPFACES_RNG_HPP
#define SEPFACES_RNG_HPP

#include <cstdint>
#include <random>

#include "sepfaces/pure_state.hpp"

namespace sepfaces {

/// Deterministic source of Gaussian and unit-phase draws. The normal
/// transform is done by hand (Box-Muller) rather than through
/// std::normal_distribution, whose output sequence is
/// implementation-defined; the artifact promises byte-identical results
/// for a fixed seed.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform01();
  /// Standard normal.
  double gauss();
  /// Re and Im independent standard normals (Ginibre entry).
  Complex complex_gauss();
  Vector complex_gauss_vector(int length);
  /// Uniform on the unit circle.
  Complex unit_phase();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Stream seed for sub-batch `index` of a run seeded with `seed`
/// (splitmix64 mix). Samples drawn from derived streams are reproducible
/// regardless of scheduling order.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index);

}  // namespace sepfaces

#endif
