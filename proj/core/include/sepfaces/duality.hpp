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

#ifndef SEPFACES_DUALITY_HPP
#define SEPFACES_DUALITY_HPP

#include <functional>

#include "sepfaces/span_oracle.hpp"
#include "sepfaces/statespace.hpp"

namespace sepfaces {

/// A linear map End(C^m) -> End(C^l) represented by its Choi matrix
/// C = sum_ij E_ij (x) Phi(E_ij), the (ml) x (ml) block matrix whose
/// (i, j) block is the image of the matrix unit E_ij.
struct LinearMapOperator {
  int domain_dim = 0;
  Matrix choi;
};

/// Assemble the Choi matrix of a map from its action on matrix units.
LinearMapOperator choi_matrix(
    const std::function<Matrix(int row, int col)>& map_on_units,
    int domain_dim);

/// phi_L(X) = L^dag X L for an m x l matrix L.
Matrix phi_l_apply(const Matrix& l_matrix, const Matrix& x);

/// The map phi_L packaged with its Choi matrix.
LinearMapOperator phi_l_operator(const Matrix& l_matrix);

/// <rho, Phi> = tr(rho^T C_Phi). Returns the real part; throws if the
/// imaginary part is not negligible (both arguments Hermitian make it
/// vanish exactly).
double pairing(const Matrix& rho, const LinearMapOperator& op);

/// The isometry between a bipartite d1 (x) d2 state and a d1 x d2 matrix
/// that sends |x>(x)|y> to |x><y*|; on amplitudes this is the row-major
/// reshape, and it preserves norms (Frobenius on the matrix side).
Matrix psi_iso(const PureState& alpha);
PureState psi_inv(const Matrix& l_matrix, int d1 = -1, int d2 = -1);

/// An m x l matrix together with the bipartite state it reshapes.
struct KrausVector {
  Matrix l_matrix;
  PureState state;
};
KrausVector kraus_from_state(const PureState& alpha);
KrausVector kraus_from_matrix(const Matrix& l_matrix);

struct DualFaceReport {
  int zeros_on_v = 0;
  int positives_off_v = 0;
  int samples_per_side = 0;
  /// Largest |pairing| seen on the in-hyperplane side (normalized states).
  double max_residual = 0.0;
};

/// Check numerically that the dual face of phi_L coincides with the face
/// induced by the hyperplane orthogonal to Psi^{-1}(L): sampled product
/// vectors in the hyperplane must pair to zero with phi_L, unconstrained
/// ones must pair strictly positive (an accidental zero is re-checked for
/// hyperplane membership before it counts as a failure).
DualFaceReport verify_dual_face_equals_fv(const KrausVector& kraus,
                                          const OracleConfig& cfg = {},
                                          int samples_per_side = 100);

}  // namespace sepfaces

#endif
