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

#include "sepfaces/statespace.hpp"

#include <stdexcept>

#include <Eigen/SVD>

namespace sepfaces {

PureState tensor_product(const std::vector<Vector>& factors) {
  if (factors.empty())
    throw std::invalid_argument("tensor_product: no factors");
  std::vector<int> dims;
  dims.reserve(factors.size());
  for (const Vector& f : factors) {
    if (f.size() == 0 || f.norm() == 0.0)
      throw std::invalid_argument("tensor_product: zero factor");
    dims.push_back(static_cast<int>(f.size()));
  }
  SystemShape shape(dims);
  Vector amps(shape.total_dim());
  for (int flat = 0; flat < shape.total_dim(); ++flat) {
    std::vector<int> digits = shape.unflatten(flat);
    Complex value{1.0, 0.0};
    for (size_t p = 0; p < factors.size(); ++p) value *= factors[p][digits[p]];
    amps[flat] = value;
  }
  return PureState(std::move(shape), std::move(amps));
}

Matrix matricize(const PureState& state, PartySubset subset) {
  const SystemShape& shape = state.shape();
  const int n = shape.party_count();
  if (!subset.is_proper_nonempty(n))
    throw std::invalid_argument("matricize: subset must be proper and nonempty");
  const PartySubset co = subset.complement(n);
  Matrix out = Matrix::Zero(shape.subset_dim(subset), shape.subset_dim(co));
  for (int flat = 0; flat < shape.total_dim(); ++flat) {
    std::vector<int> digits = shape.unflatten(flat);
    out(shape.subset_index(digits, subset), shape.subset_index(digits, co)) =
        state.amplitudes()[flat];
  }
  return out;
}

int schmidt_rank(const PureState& state, PartySubset subset, double rel_tol) {
  return numerical_rank(matricize(state, subset), rel_tol);
}

Matrix partial_transpose(const Matrix& op, const SystemShape& shape,
                         PartySubset subset) {
  const int d = shape.total_dim();
  if (op.rows() != d || op.cols() != d)
    throw std::invalid_argument("partial_transpose: operator shape mismatch");
  const int n = shape.party_count();
  Matrix out(d, d);
  std::vector<int> row_digits, col_digits;
  for (int r = 0; r < d; ++r) {
    row_digits = shape.unflatten(r);
    for (int c = 0; c < d; ++c) {
      col_digits = shape.unflatten(c);
      std::vector<int> tr = row_digits, tc = col_digits;
      for (int p = 0; p < n; ++p)
        if (subset.contains(p)) std::swap(tr[p], tc[p]);
      out(shape.flatten(tr), shape.flatten(tc)) = op(r, c);
    }
  }
  return out;
}

std::vector<Vector> partial_conjugate(std::vector<Vector> factors,
                                      PartySubset subset) {
  for (size_t p = 0; p < factors.size(); ++p)
    if (subset.contains(static_cast<int>(p)))
      factors[p] = factors[p].conjugate();
  return factors;
}

bool is_hermitian(const Matrix& op, double rel_tol) {
  if (op.rows() != op.cols()) return false;
  const double scale = op.cwiseAbs().maxCoeff();
  if (scale == 0.0) return true;
  return (op - op.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

RealVector hermitian_to_real_vector(const Matrix& op, double rel_tol) {
  if (!is_hermitian(op, rel_tol))
    throw std::invalid_argument("hermitian_to_real_vector: input not Hermitian");
  const int d = static_cast<int>(op.rows());
  RealVector out(static_cast<long>(d) * d);
  int k = 0;
  for (int i = 0; i < d; ++i) out[k++] = op(i, i).real();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      out[k++] = op(i, j).real();
      out[k++] = op(i, j).imag();
    }
  return out;
}

namespace {

template <typename MatrixType>
int rank_from_singvalues(const MatrixType& mat, double rel_tol) {
  if (mat.rows() == 0 || mat.cols() == 0)
    throw std::invalid_argument("numerical_rank: empty input");
  Eigen::BDCSVD<MatrixType> svd(mat);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_tol * sv[0];
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return rank;
}

}  // namespace

int numerical_rank(const RealMatrix& mat, double rel_tol) {
  return rank_from_singvalues(mat, rel_tol);
}

int numerical_rank(const Matrix& mat, double rel_tol) {
  return rank_from_singvalues(mat, rel_tol);
}

RealSpanBasis::RealSpanBasis(int vector_length) : vec_len_(vector_length) {
  if (vector_length <= 0)
    throw std::invalid_argument("RealSpanBasis: vector length must be positive");
}

void RealSpanBasis::add(const RealVector& row) {
  if (row.size() != vec_len_)
    throw std::invalid_argument("RealSpanBasis: row length mismatch");
  rows_.push_back(row);
  sv_cache_.reset();
}

RealMatrix RealSpanBasis::to_matrix() const {
  RealMatrix mat(row_count(), vec_len_);
  for (int i = 0; i < row_count(); ++i) mat.row(i) = rows_[i];
  return mat;
}

const RealVector& RealSpanBasis::singular_values() const {
  if (!sv_cache_) {
    if (rows_.empty())
      throw std::invalid_argument("RealSpanBasis: no rows");
    Eigen::BDCSVD<RealMatrix> svd(to_matrix());
    sv_cache_ = svd.singularValues();
  }
  return *sv_cache_;
}

int RealSpanBasis::rank(double rel_tol) const {
  const RealVector& sv = singular_values();
  const double cutoff = rel_tol * sv[0];
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return rank;
}

int RealSpanBasis::prefix_rank(int rows, double rel_tol) const {
  if (rows <= 0 || rows > row_count())
    throw std::invalid_argument("RealSpanBasis: bad prefix length");
  RealMatrix mat(rows, vec_len_);
  for (int i = 0; i < rows; ++i) mat.row(i) = rows_[i];
  return numerical_rank(mat, rel_tol);
}

}  // namespace sepfaces
