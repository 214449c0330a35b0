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

// Acceptance suite. Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sepfaces/duality.hpp"
#include "sepfaces/faces.hpp"
#include "sepfaces/hakye.hpp"
#include "sepfaces/span_oracle.hpp"

namespace {

using namespace sepfaces;

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass,
            const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion,
              label.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void run(int criterion, const std::string& label,
         const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [pass, detail] = body();
    report(criterion, label, pass, detail);
  } catch (const std::exception& err) {
    report(criterion, label, false, std::string("exception: ") + err.what());
  }
}

Vector basis_product(const std::vector<int>& dims,
                     const std::vector<int>& digits) {
  int total = 1, flat = 0;
  for (size_t p = 0; p < dims.size(); ++p) {
    total *= dims[p];
    flat = flat * dims[p] + digits[p];
  }
  Vector v = Vector::Zero(total);
  v[flat] = Complex{1, 0};
  return v;
}

PureState ghz3() {
  Vector amps = Vector::Zero(8);
  amps[0] = amps[7] = Complex{1, 0};
  return PureState(SystemShape({2, 2, 2}), amps / std::sqrt(2.0));
}

PureState bell22() {
  Vector amps = Vector::Zero(4);
  amps[0] = amps[3] = Complex{1, 0};
  return PureState(SystemShape({2, 2}), amps / std::sqrt(2.0));
}

PureState zero_tensor_bell() {
  Vector amps = Vector::Zero(8);
  amps[0] = amps[3] = Complex{1, 0};
  return PureState(SystemShape({2, 2, 2}), amps / std::sqrt(2.0));
}

PureState phase_twisted_bell() {
  Vector amps = Vector::Zero(4);
  amps[0] = Complex{1, 0};
  amps[3] = Complex{0, 1};
  return PureState(SystemShape({2, 2}), amps / std::sqrt(2.0));
}

/// formula and oracle agree at the expected value, with saturation
std::pair<bool, std::string> check_state_dim(const PureState& state,
                                             int expected,
                                             std::uint64_t seed) {
  OracleConfig cfg;
  cfg.seed = seed;
  const int formula = face_dim_formula(ge_decompose(state));
  const OracleResult oracle = face_dim_oracle(state, cfg);
  std::ostringstream detail;
  detail << "formula " << formula << ", oracle " << oracle.dim
         << (oracle.saturated ? ", saturated" : ", NOT saturated");
  const bool pass =
      formula == expected && oracle.dim == expected && oracle.saturated;
  return {pass, detail.str()};
}

bool projector_fixed_directly(const PureState& state, PartySubset subset) {
  const Vector unit = state.amplitudes() / state.norm();
  const Matrix rho = unit * unit.adjoint();
  const Matrix pt = partial_transpose(rho, state.shape(), subset);
  return (pt - rho).cwiseAbs().maxCoeff() <= 1e-10;
}

// --- criterion bodies ------------------------------------------------------

std::pair<bool, std::string> criterion1() {
  return check_state_dim(ghz3(), 48, 1);
}

std::pair<bool, std::string> criterion2() {
  const PureState s11(SystemShape({2, 2}), basis_product({2, 2}, {1, 1}));
  const auto [pass_a, detail_a] = check_state_dim(s11, 6, 2);

  const PureState s00_23(SystemShape({2, 3}), basis_product({2, 3}, {0, 0}));
  const auto [pass_b, detail_b] = check_state_dim(s00_23, 20, 2);

  return {pass_a && pass_b,
          "2x2: " + detail_a + "; 2x3: " + detail_b};
}

std::pair<bool, std::string> criterion3() {
  const SystemShape shape({3, 3});
  Vector rank1 = Vector::Zero(9);
  rank1[0] = Complex{1, 0};
  Vector rank2 = Vector::Zero(9);
  rank2[0] = rank2[4] = Complex{1, 0};
  Vector rank3 = Vector::Zero(9);
  rank3[0] = rank3[4] = rank3[8] = Complex{1, 0};

  const auto [p1, d1] = check_state_dim(PureState(shape, rank1), 55, 31);
  const auto [p2, d2] = check_state_dim(PureState(shape, rank2), 63, 32);
  const auto [p3, d3] = check_state_dim(PureState(shape, rank3), 63, 33);
  return {p1 && p2 && p3,
          "rank1: " + d1 + "; rank2: " + d2 + "; rank3: " + d3};
}

std::pair<bool, std::string> criterion4() {
  const auto [p1, d1] = check_state_dim(zero_tensor_bell(), 42, 4);

  SeededRng rng(44);
  Vector amps = rng.complex_gauss_vector(8);
  const PureState haar(SystemShape({2, 2, 2}), amps / amps.norm());
  const GeDecomposition decomp = ge_decompose(haar);
  const auto [p2, d2] = check_state_dim(haar, 48, 4);
  const bool single_block = decomp.block_count() == 1;
  return {p1 && p2 && single_block,
          "|0>xBell: " + d1 + "; Haar: " + d2 + ", m=" +
              std::to_string(decomp.block_count())};
}

std::pair<bool, std::string> criterion5() {
  const PureState state = zero_tensor_bell();
  const GeDecomposition decomp = ge_decompose(state);
  OracleConfig cfg;
  cfg.seed = 5;
  int mismatches = 0;
  for (std::uint32_t bits = 0; bits < 8; ++bits) {
    const PartySubset subset = PartySubset::from_bits(bits);
    const int rank = range_rank_oracle(state, subset, cfg);
    const bool block_union = theta_prime_contains(decomp, subset);
    if (rank != (block_union ? 7 : 8)) ++mismatches;
  }
  return {mismatches == 0,
          "8 subsets scanned, " + std::to_string(mismatches) + " mismatches"};
}

std::pair<bool, std::string> criterion6() {
  const std::vector<PureState> grid = {ghz3(), phase_twisted_bell(),
                                       zero_tensor_bell()};
  int mismatches = 0, checked = 0;
  for (const PureState& state : grid) {
    const GeDecomposition decomp = ge_decompose(state);
    const int n = state.shape().party_count();
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      const PartySubset subset = PartySubset::from_bits(bits);
      ++checked;
      if (fixes_projector(decomp, subset) !=
          projector_fixed_directly(state, subset))
        ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(checked) + " (state, subset) pairs, " +
                               std::to_string(mismatches) + " mismatches"};
}

std::pair<bool, std::string> criterion7() {
  std::ostringstream detail;
  bool pass = true;
  for (double b : {0.5, 2.0, 3.0}) {
    OracleConfig cfg;
    cfg.seed = 7;
    const HaKye33Dims dims = hakye33_dims(b, cfg);
    const bool ok = dims.per_family_dims == std::array<int, 4>{19, 5, 5, 5} &&
                    dims.total_dim == 28 && dims.face_dim == 27;
    pass = pass && ok;
    detail << "b=" << b << ": [" << dims.per_family_dims[0] << ","
           << dims.per_family_dims[1] << "," << dims.per_family_dims[2] << ","
           << dims.per_family_dims[3] << "]/" << dims.total_dim << "/"
           << dims.face_dim << " ";
  }
  return {pass, detail.str()};
}

std::pair<bool, std::string> criterion8() {
  OracleConfig cfg;
  cfg.seed = 8;
  const HaKye24Dim dim = hakye24_dim(hakye24_params(2, 1, 1, 1), cfg);
  std::ostringstream detail;
  detail << "measured span_dim " << dim.span_dim << ", face_dim "
         << dim.face_dim << (dim.saturated ? ", saturated" : ", NOT saturated");
  return {dim.bound_ok && dim.saturated, detail.str()};
}

std::pair<bool, std::string> criterion9() {
  OracleConfig cfg;
  cfg.seed = 9;

  std::vector<std::pair<std::string, KrausVector>> cases;
  cases.emplace_back("Psi(|11>)",
                     kraus_from_state(PureState(
                         SystemShape({2, 2}), basis_product({2, 2}, {1, 1}))));
  cases.emplace_back("I2", kraus_from_matrix(Matrix::Identity(2, 2)));
  SeededRng rng(99);
  Matrix random_l(3, 3);
  for (int i = 0; i < 3; ++i) random_l.row(i) = rng.complex_gauss_vector(3);
  cases.emplace_back("random 3x3", kraus_from_matrix(random_l));

  bool pass = true;
  std::ostringstream detail;
  for (const auto& [name, kraus] : cases) {
    const DualFaceReport rep = verify_dual_face_equals_fv(kraus, cfg, 100);
    const bool ok = rep.zeros_on_v == 100 && rep.positives_off_v == 100;
    pass = pass && ok;
    detail << name << ": " << rep.zeros_on_v << "/100 zeros, "
           << rep.positives_off_v << "/100 positive; ";
  }
  return {pass, detail.str()};
}

std::pair<bool, std::string> criterion10() {
  constexpr int kCases = 200;
  SeededRng rng(10);
  std::ostringstream detail;
  bool pass = true;

  auto random_shape = [&rng](int max_parties) {
    const int n = 2 + static_cast<int>(rng.uniform01() * (max_parties - 1));
    std::vector<int> dims(n);
    for (int& d : dims) d = 2 + static_cast<int>(rng.uniform01() * 2);
    return SystemShape(dims);
  };

  auto random_hermitian = [&rng](int d) {
    Matrix g(d, d);
    for (int i = 0; i < d; ++i) g.row(i) = rng.complex_gauss_vector(d);
    return Matrix((g + g.adjoint()) / 2.0);
  };

  // independent reassembly used by the reconstruction property
  auto assemble = [](const SystemShape& shape,
                     const std::vector<GeBlock>& blocks, Complex scale) {
    Vector out(shape.total_dim());
    for (int flat = 0; flat < shape.total_dim(); ++flat) {
      const auto digits = shape.unflatten(flat);
      Complex value = scale;
      for (const GeBlock& block : blocks) {
        int sub = 0;
        for (int p : block.parties.members()) sub = sub * shape.dim(p) + digits[p];
        value *= block.component[sub];
      }
      out[flat] = value;
    }
    return out;
  };

  auto planted_state = [&rng](const SystemShape& shape) {
    const int n = shape.party_count();
    std::vector<std::vector<int>> blocks;
    for (int p = 0; p < n; ++p) {
      const int pick = static_cast<int>(rng.uniform01() * (blocks.size() + 1));
      if (pick >= static_cast<int>(blocks.size()))
        blocks.push_back({p});
      else
        blocks[pick].push_back(p);
    }
    Vector amps = Vector::Ones(shape.total_dim());
    std::vector<Vector> comps;
    for (auto& block : blocks) {
      int dim = 1;
      for (int p : block) dim *= shape.dim(p);
      comps.push_back(rng.complex_gauss_vector(dim));
    }
    for (int flat = 0; flat < shape.total_dim(); ++flat) {
      const auto digits = shape.unflatten(flat);
      Complex value{1, 0};
      for (size_t bindex = 0; bindex < blocks.size(); ++bindex) {
        int sub = 0;
        for (int p : blocks[bindex]) sub = sub * shape.dim(p) + digits[p];
        value *= comps[bindex][sub];
      }
      amps[flat] = value;
    }
    return PureState(shape, amps);
  };

  // (a) partial transposition group law
  int bad = 0;
  for (int it = 0; it < kCases; ++it) {
    const SystemShape shape = random_shape(3);
    const int n = shape.party_count();
    const Matrix m = random_hermitian(shape.total_dim());
    const auto s = PartySubset::from_bits(
        static_cast<std::uint32_t>(rng.uniform01() * (1u << n)));
    const auto t = PartySubset::from_bits(
        static_cast<std::uint32_t>(rng.uniform01() * (1u << n)));
    const Matrix lhs = partial_transpose(partial_transpose(m, shape, t), shape, s);
    if ((lhs - partial_transpose(m, shape, s ^ t)).norm() > 1e-13 * m.norm())
      ++bad;
  }
  pass = pass && bad == 0;
  detail << "group-law " << kCases - bad << "/" << kCases;

  // (b) vectorization linearity and injectivity
  bad = 0;
  for (int it = 0; it < kCases; ++it) {
    const int d = 2 + static_cast<int>(rng.uniform01() * 5);
    const Matrix m = random_hermitian(d), n = random_hermitian(d);
    const double a = rng.gauss(), b = rng.gauss();
    const RealVector lhs = hermitian_to_real_vector(a * m + b * n);
    const RealVector rhs =
        a * hermitian_to_real_vector(m) + b * hermitian_to_real_vector(n);
    const bool linear = (lhs - rhs).norm() <= 1e-11 * (1.0 + lhs.norm());
    const bool injective = 2.0 * hermitian_to_real_vector(m).squaredNorm() >=
                           m.squaredNorm() * (1.0 - 1e-12);
    if (!linear || !injective) ++bad;
  }
  pass = pass && bad == 0;
  detail << ", vectorization " << kCases - bad << "/" << kCases;

  // (c) decomposition reconstructs the input within 1e-10
  bad = 0;
  for (int it = 0; it < kCases; ++it) {
    const SystemShape shape = random_shape(4);
    PureState state = planted_state(shape);
    if (it % 2 == 1) {
      Vector amps = rng.complex_gauss_vector(shape.total_dim());
      state = PureState(shape, amps);
    }
    const GeDecomposition decomp = ge_decompose(state);
    const Vector rebuilt =
        assemble(shape, decomp.blocks(), decomp.global_scale());
    if ((rebuilt - state.amplitudes()).norm() >
        1e-10 * state.amplitudes().norm())
      ++bad;
  }
  pass = pass && bad == 0;
  detail << ", reconstruction " << kCases - bad << "/" << kCases;

  // (d) oracle determinism under a fixed seed
  bad = 0;
  for (int it = 0; it < kCases; ++it) {
    Vector amps = rng.complex_gauss_vector(4);
    const PureState alpha(SystemShape({2, 2}), amps / amps.norm());
    OracleConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(rng.uniform01() * 1e9);
    const OracleResult a = face_dim_oracle(alpha, cfg);
    const OracleResult b = face_dim_oracle(alpha, cfg);
    if (a.span_rank != b.span_rank || a.dim != b.dim ||
        a.saturated != b.saturated || a.sv_gap != b.sv_gap)
      ++bad;
  }
  pass = pass && bad == 0;
  detail << ", determinism " << kCases - bad << "/" << kCases;

  // (e) prod(2 d'_i - 1) >= 2d - 1 with equality exactly for one block
  bad = 0;
  for (int it = 0; it < kCases; ++it) {
    const SystemShape shape = random_shape(4);
    PureState state = planted_state(shape);
    if (it % 3 == 0) {
      Vector amps = rng.complex_gauss_vector(shape.total_dim());
      state = PureState(shape, amps);
    }
    const GeDecomposition decomp = ge_decompose(state);
    long long prod = 1;
    for (int bd : decomp.block_dims()) prod *= 2LL * bd - 1;
    const bool bound = prod >= 2LL * shape.total_dim() - 1;
    const bool tight =
        (prod == 2LL * shape.total_dim() - 1) == (decomp.block_count() == 1);
    if (!bound || !tight) ++bad;
  }
  pass = pass && bad == 0;
  detail << ", block-bound " << kCases - bad << "/" << kCases;

  return {pass, detail.str()};
}

}  // namespace

int main() {
  run(1, "GHZ face dimension, formula vs oracle", criterion1);
  run(2, "product-vector dimensions in 2x2 and 2x3", criterion2);
  run(3, "bipartite Schmidt-rank dichotomy in 3x3", criterion3);
  run(4, "mixed block structure in 2x2x2", criterion4);
  run(5, "theta scan of |0> x Bell", criterion5);
  run(6, "projector stabilizer vs direct matrix equality", criterion6);
  run(7, "3x3 family span dimensions", criterion7);
  run(8, "2x4 family span-dimension bounds", criterion8);
  run(9, "dual faces of phi_L match hyperplane faces", criterion9);
  run(10, "randomized property suite (>= 200 cases each)", criterion10);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
