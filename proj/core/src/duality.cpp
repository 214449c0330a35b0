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

#include "sepfaces/duality.hpp"

#include <cmath>
#include <stdexcept>

namespace sepfaces {

LinearMapOperator choi_matrix(
    const std::function<Matrix(int row, int col)>& map_on_units,
    int domain_dim) {
  if (domain_dim <= 0)
    throw std::invalid_argument("choi_matrix: domain dim must be positive");
  const Matrix first = map_on_units(0, 0);
  const long l = first.rows();
  if (l <= 0 || first.cols() != l)
    throw std::invalid_argument("choi_matrix: map images must be square");

  Matrix choi(domain_dim * l, domain_dim * l);
  for (int i = 0; i < domain_dim; ++i)
    for (int j = 0; j < domain_dim; ++j) {
      const Matrix block = (i == 0 && j == 0) ? first : map_on_units(i, j);
      if (block.rows() != l || block.cols() != l)
        throw std::invalid_argument("choi_matrix: inconsistent block sizes");
      choi.block(i * l, j * l, l, l) = block;
    }
  return {domain_dim, std::move(choi)};
}

Matrix phi_l_apply(const Matrix& l_matrix, const Matrix& x) {
  if (x.rows() != l_matrix.rows() || x.cols() != l_matrix.rows())
    throw std::invalid_argument("phi_l_apply: argument must be m x m");
  return l_matrix.adjoint() * x * l_matrix;
}

LinearMapOperator phi_l_operator(const Matrix& l_matrix) {
  const int m = static_cast<int>(l_matrix.rows());
  return choi_matrix(
      [&l_matrix, m](int i, int j) {
        Matrix unit = Matrix::Zero(m, m);
        unit(i, j) = Complex{1.0, 0.0};
        return phi_l_apply(l_matrix, unit);
      },
      m);
}

double pairing(const Matrix& rho, const LinearMapOperator& op) {
  if (rho.rows() != op.choi.rows() || rho.cols() != op.choi.cols())
    throw std::invalid_argument("pairing: dimension mismatch");
  const Complex value = (rho.transpose() * op.choi).trace();
  const double scale = std::max(1.0, rho.norm() * op.choi.norm());
  if (std::abs(value.imag()) > 1e-10 * scale)
    throw std::runtime_error("pairing: non-negligible imaginary part");
  return value.real();
}

Matrix psi_iso(const PureState& alpha) {
  const SystemShape& shape = alpha.shape();
  if (shape.party_count() != 2)
    throw std::invalid_argument("psi_iso: state must be bipartite");
  const int d1 = shape.dim(0);
  const int d2 = shape.dim(1);
  // |x>(x)|y> -> |x><y*|: the bra of the conjugated ket undoes the
  // conjugation, leaving the row-major reshape of the amplitudes.
  Matrix l_matrix(d1, d2);
  for (int x = 0; x < d1; ++x)
    for (int y = 0; y < d2; ++y)
      l_matrix(x, y) = alpha.amplitudes()[x * d2 + y];
  return l_matrix;
}

PureState psi_inv(const Matrix& l_matrix, int d1, int d2) {
  if (d1 < 0) d1 = static_cast<int>(l_matrix.rows());
  if (d2 < 0) d2 = static_cast<int>(l_matrix.cols());
  if (d1 != l_matrix.rows() || d2 != l_matrix.cols())
    throw std::invalid_argument("psi_inv: dimension mismatch");
  Vector amps(d1 * d2);
  for (int x = 0; x < d1; ++x)
    for (int y = 0; y < d2; ++y) amps[x * d2 + y] = l_matrix(x, y);
  return PureState(SystemShape({d1, d2}), std::move(amps));
}

KrausVector kraus_from_state(const PureState& alpha) {
  return {psi_iso(alpha), alpha};
}

KrausVector kraus_from_matrix(const Matrix& l_matrix) {
  return {l_matrix, psi_inv(l_matrix)};
}

DualFaceReport verify_dual_face_equals_fv(const KrausVector& kraus,
                                          const OracleConfig& cfg,
                                          int samples_per_side) {
  const PureState& alpha = kraus.state;
  const SystemShape& shape = alpha.shape();
  const int n = shape.party_count();
  const LinearMapOperator phi = phi_l_operator(kraus.l_matrix);
  const double pairing_tol = 1e-10 * std::max(1.0, kraus.l_matrix.squaredNorm());

  DualFaceReport report;
  report.samples_per_side = samples_per_side;

  for (int i = 0; i < samples_per_side; ++i) {
    SeededRng rng(derive_stream(cfg.seed, static_cast<std::uint64_t>(i)));
    const std::vector<Vector> factors =
        sample_product_in_hyperplane(alpha, i % n, rng);
    const PureState product = tensor_product(factors);
    const Vector unit = product.amplitudes() / product.norm();
    const double value = pairing(unit * unit.adjoint(), phi);
    report.max_residual = std::max(report.max_residual, std::abs(value));
    if (std::abs(value) <= pairing_tol) ++report.zeros_on_v;
  }

  for (int i = 0; i < samples_per_side; ++i) {
    SeededRng rng(derive_stream(cfg.seed, 0x10000000ull + i));
    std::vector<Vector> factors(n);
    for (int p = 0; p < n; ++p)
      factors[p] = rng.complex_gauss_vector(shape.dim(p));
    const PureState product = tensor_product(factors);
    const Vector unit = product.amplitudes() / product.norm();
    const double value = pairing(unit * unit.adjoint(), phi);
    if (value > pairing_tol) {
      ++report.positives_off_v;
    } else {
      // accidental zero: legitimate only if the draw actually lies in
      // the hyperplane
      const Complex overlap = alpha.amplitudes().dot(unit);
      if (std::abs(overlap) <= 1e-10 * alpha.norm()) ++report.positives_off_v;
    }
  }
  return report;
}

}  // namespace sepfaces
