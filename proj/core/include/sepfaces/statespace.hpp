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

#ifndef SEPFACES_STATESPACE_HPP
#define SEPFACES_STATESPACE_HPP

#include <optional>
#include <vector>

#include "sepfaces/pure_state.hpp"

namespace sepfaces {

/// Relative singular-value threshold shared by all rank decisions.
inline constexpr double kRankTol = 1e-8;
/// Relative tolerance of the Hermiticity check (scaled by the largest
/// absolute entry).
inline constexpr double kHermitianTol = 1e-12;

/// |x_1> ⊗ ... ⊗ |x_n>; the shape is read off the factor lengths.
/// Throws std::invalid_argument if any factor is zero or empty.
PureState tensor_product(const std::vector<Vector>& factors);

/// Reshape the amplitude tensor into a matrix: rows run over the
/// multi-indices of the parties in S (ascending party order, lexicographic),
/// columns over the complementary parties. S must be proper and nonempty.
Matrix matricize(const PureState& state, PartySubset subset);

/// Numerical rank of the S|S^c matricization.
int schmidt_rank(const PureState& state, PartySubset subset,
                 double rel_tol = kRankTol);

/// Transpose the tensor factors indexed by S of a d x d operator.
/// An involution; the full subset gives the ordinary transpose.
Matrix partial_transpose(const Matrix& op, const SystemShape& shape,
                         PartySubset subset);

/// Entrywise conjugate of the factors indexed by S (defined up to phase as
/// a state); factors not in S pass through unchanged.
std::vector<Vector> partial_conjugate(std::vector<Vector> factors,
                                      PartySubset subset);

bool is_hermitian(const Matrix& op, double rel_tol = kHermitianTol);

/// Linear bijection from d x d Hermitian matrices onto R^{d^2}: the d real
/// diagonal entries in index order, then (Re, Im) of the strictly upper
/// entries in row-major order. Throws if the input fails the Hermiticity
/// check.
RealVector hermitian_to_real_vector(const Matrix& op,
                                    double rel_tol = kHermitianTol);

/// Count of singular values above rel_tol times the largest one.
int numerical_rank(const RealMatrix& mat, double rel_tol = kRankTol);
int numerical_rank(const Matrix& mat, double rel_tol = kRankTol);

/// Row accumulator for real spans of vectorized Hermitian matrices;
/// singular values are cached until the next row is added.
class RealSpanBasis {
 public:
  explicit RealSpanBasis(int vector_length);

  void add(const RealVector& row);
  int row_count() const { return static_cast<int>(rows_.size()); }
  int vector_length() const { return vec_len_; }

  RealMatrix to_matrix() const;
  const RealVector& singular_values() const;
  int rank(double rel_tol = kRankTol) const;
  /// Rank of the span of the first `rows` rows only.
  int prefix_rank(int rows, double rel_tol = kRankTol) const;

 private:
  int vec_len_;
  std::vector<RealVector> rows_;
  mutable std::optional<RealVector> sv_cache_;
};

}  // namespace sepfaces

#endif
