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

#include "sepfaces/pure_state.hpp"

#include <stdexcept>

namespace sepfaces {

PureState::PureState(SystemShape shape, Vector amplitudes)
    : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != shape_.total_dim())
    throw std::invalid_argument(
        "PureState: amplitude length does not match the shape");
  if (amplitudes_.norm() == 0.0)
    throw std::invalid_argument("PureState: zero state");
}

PureState PureState::normalized() const {
  return PureState(shape_, amplitudes_ / amplitudes_.norm());
}

}  // namespace sepfaces
