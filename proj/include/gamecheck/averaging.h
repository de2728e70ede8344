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

#ifndef GAMECHECK_AVERAGING_H_
#define GAMECHECK_AVERAGING_H_

#include <span>

#include "gamecheck/game.h"
#include "gamecheck/tensor.h"

namespace gamecheck {

// Subtracts the weighted mean over player `player`'s strategies:
//   out(s) = h(s) - sum_k w_k h(k, s_{-i}) / sum_k w_k.
// The result has zero weighted mean along that axis, and vanishes exactly
// when h does not depend on s_i.
Tensor Center(const Tensor& h, const WeightedStrategySpace& space, int player);

// The complementary operator h - Center(h): the weighted mean along the axis,
// broadcast back to full shape. The output is exactly constant along the axis.
Tensor AverageOut(const Tensor& h, const WeightedStrategySpace& space, int player);

// Same weighted mean, kept collapsed (extent 1 on the player's axis).
Tensor MeanAlong(const Tensor& h, const WeightedStrategySpace& space, int player);

// Composition of Center over distinct players, applied in ascending player
// order. An empty list is the identity. Throws DuplicateAxis.
Tensor CenterAxes(const Tensor& h, const WeightedStrategySpace& space,
                  std::span<const int> players);

}  // namespace gamecheck

#endif  // GAMECHECK_AVERAGING_H_
