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

#ifndef SEPFACES_PURE_STATE_HPP
#define SEPFACES_PURE_STATE_HPP

#include <complex>

#include <Eigen/Core>

#include "sepfaces/system_shape.hpp"

namespace sepfaces {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// A nonzero vector of a multipartite system, amplitudes in the shared
/// lexicographic multi-index order.
class PureState {
 public:
  PureState(SystemShape shape, Vector amplitudes);

  const SystemShape& shape() const { return shape_; }
  const Vector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

  /// Same state with unit-norm amplitudes.
  PureState normalized() const;

 private:
  SystemShape shape_;
  Vector amplitudes_;
};

}  // namespace sepfaces

#endif
