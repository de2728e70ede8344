// Copyright 2026 The gamecheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gamecheck/averaging.h"

#include <algorithm>
#include <string>
#include <vector>

#include "gamecheck/error.h"
#include "gamecheck/kernels.h"

namespace gamecheck {
namespace {

void CheckOperands(const Tensor& h, const WeightedStrategySpace& space,
                   int player) {
  if (h.shape() != space.sizes()) {
    throw GameError(ErrorCode::kShapeMismatch,
                    "tensor shape does not match the strategy space");
  }
  if (player < 0 || player >= space.num_players()) {
    throw GameError(ErrorCode::kIndexOutOfRange,
                    "no player " + std::to_string(player));
  }
}

}  // namespace

Tensor Center(const Tensor& h, const WeightedStrategySpace& space, int player) {
  CheckOperands(h, space, player);
  Tensor out(h.shape());
  kernels::CenterAlong(h.data(), out.data(), h.shape(), player,
                       space.weights(player), space.total_weight(player));
  return out;
}

Tensor MeanAlong(const Tensor& h, const WeightedStrategySpace& space, int player) {
  CheckOperands(h, space, player);
  Shape collapsed = h.shape();
  collapsed[player] = 1;
  Tensor out(std::move(collapsed));
  kernels::MeanAlong(h.data(), out.data(), h.shape(), player,
                     space.weights(player), space.total_weight(player));
  return out;
}

Tensor AverageOut(const Tensor& h, const WeightedStrategySpace& space, int player) {
  return BroadcastAlong(MeanAlong(h, space, player), h.shape(), player);
}

Tensor CenterAxes(const Tensor& h, const WeightedStrategySpace& space,
                  std::span<const int> players) {
  std::vector<int> order(players.begin(), players.end());
  std::sort(order.begin(), order.end());
  if (std::adjacent_find(order.begin(), order.end()) != order.end()) {
    throw GameError(ErrorCode::kDuplicateAxis, "players must be distinct");
  }
  if (h.shape() != space.sizes()) {
    throw GameError(ErrorCode::kShapeMismatch,
                    "tensor shape does not match the strategy space");
  }
  for (int p : order) {
    if (p < 0 || p >= space.num_players()) {
      throw GameError(ErrorCode::kIndexOutOfRange, "no player " + std::to_string(p));
    }
  }
  Tensor current = h;
  Tensor scratch(h.shape());
  for (int p : order) {
    kernels::CenterAlong(current.data(), scratch.data(), h.shape(), p,
                         space.weights(p), space.total_weight(p));
    std::swap(current, scratch);
  }
  return current;
}

}  // namespace gamecheck
