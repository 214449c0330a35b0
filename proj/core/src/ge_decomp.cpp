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

#include "sepfaces/ge_decomp.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include <Eigen/SVD>

namespace sepfaces {

namespace {

Vector canonicalized(Vector v) {
  v /= v.norm();
  const double max_abs = v.cwiseAbs().maxCoeff();
  int lead = 0;
  while (std::abs(v[lead]) <= 1e-12 * max_abs) ++lead;
  v *= std::conj(v[lead]) / std::abs(v[lead]);
  return v;
}

/// Size-k subsets of {0, ..., n-1} that contain 0, in lexicographic order
/// of their member lists.
class LeadingCombinations {
 public:
  LeadingCombinations(int n, int k) : n_(n), members_(k) {
    std::iota(members_.begin(), members_.end(), 0);
  }

  bool valid() const { return members_.back() < n_; }

  PartySubset subset() const {
    PartySubset s;
    for (int m : members_) s = s.with(m);
    return s;
  }

  // advance the tail (member 0 is pinned)
  void next() {
    const int k = static_cast<int>(members_.size());
    int i = k - 1;
    while (i >= 1 && members_[i] == n_ - k + i) --i;
    if (i < 1) {
      members_.back() = n_;  // exhausted
      return;
    }
    ++members_[i];
    for (int j = i + 1; j < k; ++j) members_[j] = members_[i] + j - i;
  }

 private:
  int n_;
  std::vector<int> members_;
};

/// Tensor of unit-norm block components back into original party order.
Vector assemble_unit_tensor(const SystemShape& shape,
                            const std::vector<GeBlock>& blocks) {
  Vector out(shape.total_dim());
  for (int flat = 0; flat < shape.total_dim(); ++flat) {
    std::vector<int> digits = shape.unflatten(flat);
    Complex value{1.0, 0.0};
    for (const GeBlock& block : blocks)
      value *= block.component[shape.subset_index(digits, block.parties)];
    out[flat] = value;
  }
  return out;
}

}  // namespace

GeDecomposition::GeDecomposition(SystemShape shape, std::vector<GeBlock> blocks,
                                 Complex global_scale)
    : shape_(std::move(shape)),
      blocks_(std::move(blocks)),
      global_scale_(global_scale) {
  PartySubset seen;
  for (const GeBlock& block : blocks_) {
    if (block.parties.intersects(seen))
      throw std::invalid_argument("GeDecomposition: overlapping blocks");
    if (block.component.size() != shape_.subset_dim(block.parties))
      throw std::invalid_argument("GeDecomposition: component length mismatch");
    seen = seen ^ block.parties;
  }
  if (!seen.is_full(shape_.party_count()))
    throw std::invalid_argument("GeDecomposition: blocks must cover all parties");
}

std::vector<int> GeDecomposition::block_dims() const {
  std::vector<int> dims;
  dims.reserve(blocks_.size());
  for (const GeBlock& block : blocks_)
    dims.push_back(shape_.subset_dim(block.parties));
  return dims;
}

bool splits(const PureState& state, PartySubset subset, double rel_tol) {
  return numerical_rank(matricize(state, subset), rel_tol) == 1;
}

GeDecomposition ge_decompose(const PureState& state, double rel_tol) {
  std::vector<GeBlock> blocks;

  Vector cur = state.amplitudes();
  std::vector<int> cur_dims = state.shape().dims();
  std::vector<int> cur_parties(state.shape().party_count());
  std::iota(cur_parties.begin(), cur_parties.end(), 0);

  while (true) {
    const int n_cur = static_cast<int>(cur_parties.size());
    auto original_subset = [&](PartySubset local) {
      PartySubset s;
      for (int p = 0; p < n_cur; ++p)
        if (local.contains(p)) s = s.with(cur_parties[p]);
      return s;
    };

    if (n_cur == 1) {
      blocks.push_back({original_subset(PartySubset::of({0})),
                        canonicalized(std::move(cur))});
      break;
    }

    PureState cur_state{SystemShape(cur_dims), cur};

    // smallest splitting subset through the lowest party; ties broken
    // lexicographically
    std::optional<PartySubset> split_found;
    for (int size = 1; size < n_cur && !split_found; ++size)
      for (LeadingCombinations combos(n_cur, size); combos.valid();
           combos.next())
        if (splits(cur_state, combos.subset(), rel_tol)) {
          split_found = combos.subset();
          break;
        }

    if (!split_found) {
      blocks.push_back({original_subset(PartySubset::full(n_cur)),
                        canonicalized(std::move(cur))});
      break;
    }

    Eigen::JacobiSVD<Matrix> svd(matricize(cur_state, *split_found),
                                 Eigen::ComputeThinU | Eigen::ComputeThinV);
    blocks.push_back({original_subset(*split_found),
                      canonicalized(svd.matrixU().col(0))});

    // M = sigma * u v^dag on a rank-1 matricization, so the remaining
    // factor reads off the conjugated dominant right singular vector
    cur = svd.matrixV().col(0).conjugate();
    std::vector<int> next_dims, next_parties;
    for (int p = 0; p < n_cur; ++p)
      if (!split_found->contains(p)) {
        next_dims.push_back(cur_dims[p]);
        next_parties.push_back(cur_parties[p]);
      }
    cur_dims = std::move(next_dims);
    cur_parties = std::move(next_parties);
  }

  const Vector unit = assemble_unit_tensor(state.shape(), blocks);
  const Complex scale = unit.dot(state.amplitudes());
  return GeDecomposition(state.shape(), std::move(blocks), scale);
}

bool is_real_up_to_phase(const Vector& v, double rel_tol) {
  if (v.size() == 0 || v.norm() == 0.0)
    throw std::invalid_argument("is_real_up_to_phase: zero vector");
  Matrix pair(v.size(), 2);
  pair.col(0) = v;
  pair.col(1) = v.conjugate();
  return numerical_rank(pair, rel_tol) == 1;
}

bool theta_prime_contains(const GeDecomposition& decomp, PartySubset subset) {
  for (const GeBlock& block : decomp.blocks()) {
    const bool inside = block.parties.is_subset_of(subset);
    if (!inside && block.parties.intersects(subset)) return false;
  }
  return true;
}

bool fixes_projector(const GeDecomposition& decomp, PartySubset subset) {
  if (!theta_prime_contains(decomp, subset)) return false;
  for (const GeBlock& block : decomp.blocks())
    if (block.parties.is_subset_of(subset) &&
        !is_real_up_to_phase(block.component))
      return false;
  return true;
}

}  // namespace sepfaces
