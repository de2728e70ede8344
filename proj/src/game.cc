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

#include "gamecheck/game.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gamecheck/error.h"

namespace gamecheck {

WeightedStrategySpace::WeightedStrategySpace(Shape sizes)
    : sizes_(std::move(sizes)) {
  for (int k : sizes_) weights_.emplace_back(std::max(k, 0), 1.0);
  Validate();
}

WeightedStrategySpace::WeightedStrategySpace(
    Shape sizes, std::vector<std::vector<double>> weights)
    : sizes_(std::move(sizes)), weights_(std::move(weights)) {
  Validate();
}

void WeightedStrategySpace::Validate() {
  if (sizes_.empty()) {
    throw GameError(ErrorCode::kShapeMismatch, "a game needs at least one player");
  }
  if (weights_.size() != sizes_.size()) {
    throw GameError(ErrorCode::kShapeMismatch,
                    "expected one weight list per player");
  }
  totals_.clear();
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i] < 1) {
      throw GameError(ErrorCode::kShapeMismatch,
                      "player " + std::to_string(i) + " has no strategies");
    }
    if (weights_[i].size() != static_cast<std::size_t>(sizes_[i])) {
      throw GameError(ErrorCode::kShapeMismatch,
                      "player " + std::to_string(i) + " has " +
                          std::to_string(weights_[i].size()) + " weights for " +
                          std::to_string(sizes_[i]) + " strategies");
    }
    double total = 0.0;
    for (double w : weights_[i]) {
      if (!std::isfinite(w) || !(w > 0.0)) {
        throw GameError(ErrorCode::kNonPositiveWeight,
                        "weights must be finite and > 0");
      }
      total += w;
    }
    if (!std::isfinite(total)) {
      throw GameError(ErrorCode::kNonPositiveWeight, "total weight overflows");
    }
    totals_.push_back(total);
  }
}

bool WeightedStrategySpace::IsCountingMeasure() const {
  for (const auto& player_weights : weights_) {
    for (double w : player_weights) {
      if (w != 1.0) return false;
    }
  }
  return true;
}

bool WeightedStrategySpace::HasUniformWeights(int player) const {
  const auto& w = weights_.at(player);
  return std::all_of(w.begin(), w.end(), [&](double x) { return x == w[0]; });
}

PassiveGame::PassiveGame(int player, Tensor table)
    : player_(player), table_(std::move(table)) {
  if (player_ < 0 || player_ >= table_.rank()) {
    throw GameError(ErrorCode::kIndexOutOfRange,
                    "passive game targets player " + std::to_string(player_));
  }
  if (table_.shape()[player_] != 1) {
    throw GameError(ErrorCode::kShapeMismatch,
                    "passive table must have extent 1 on its player's axis");
  }
}

PassiveGame PassiveGame::Zero(const Shape& sizes, int player) {
  if (player < 0 || player >= static_cast<int>(sizes.size())) {
    throw GameError(ErrorCode::kIndexOutOfRange, "no such player");
  }
  Shape collapsed = sizes;
  collapsed[player] = 1;
  return PassiveGame(player, Tensor(std::move(collapsed)));
}

double PassiveGame::operator()(std::span<const int> profile) const {
  Profile p(profile.begin(), profile.end());
  if (player_ < static_cast<int>(p.size())) p[player_] = 0;
  return table_.at(p);
}

Tensor PassiveGame::Broadcast(const Shape& sizes) const {
  return BroadcastAlong(table_, sizes, player_);
}

FiniteGame::FiniteGame(
    WeightedStrategySpace space, std::vector<Tensor> payoffs,
    std::optional<std::vector<std::vector<std::string>>> labels)
    : space_(std::move(space)),
      payoffs_(std::move(payoffs)),
      labels_(std::move(labels)) {
  if (static_cast<int>(payoffs_.size()) != space_.num_players()) {
    throw GameError(ErrorCode::kShapeMismatch,
                    "expected " + std::to_string(space_.num_players()) +
                        " payoff tensors, got " +
                        std::to_string(payoffs_.size()));
  }
  for (const Tensor& t : payoffs_) {
    if (t.shape() != space_.sizes()) {
      throw GameError(ErrorCode::kShapeMismatch,
                      "payoff tensor shape does not match strategy sizes");
    }
    if (!t.AllFinite()) {
      throw GameError(ErrorCode::kNonFiniteEntry, "payoffs must be finite");
    }
  }
  if (labels_) {
    if (static_cast<int>(labels_->size()) != space_.num_players()) {
      throw GameError(ErrorCode::kShapeMismatch, "one label list per player");
    }
    for (int i = 0; i < space_.num_players(); ++i) {
      if (static_cast<int>((*labels_)[i].size()) != space_.size(i)) {
        throw GameError(ErrorCode::kShapeMismatch,
                        "label count differs from strategy count for player " +
                            std::to_string(i));
      }
    }
  }
}

const Tensor& FiniteGame::payoff(int player) const {
  if (player < 0 || player >= num_players()) {
    throw GameError(ErrorCode::kIndexOutOfRange,
                    "no player " + std::to_string(player));
  }
  return payoffs_[player];
}

double FiniteGame::Payoff(int player, std::span<const int> profile) const {
  return payoff(player).at(profile);
}

FiniteGame NewGame(Shape sizes, std::vector<Tensor> payoffs,
                   std::optional<std::vector<std::vector<double>>> weights) {
  WeightedStrategySpace space =
      weights ? WeightedStrategySpace(std::move(sizes), std::move(*weights))
              : WeightedStrategySpace(std::move(sizes));
  return FiniteGame(std::move(space), std::move(payoffs));
}

FiniteGame AddPassive(const FiniteGame& game,
                      std::span<const PassiveGame> passives) {
  if (static_cast<int>(passives.size()) != game.num_players()) {
    throw GameError(ErrorCode::kShapeMismatch, "one passive game per player");
  }
  std::vector<Tensor> payoffs = game.payoffs();
  for (int i = 0; i < game.num_players(); ++i) {
    if (passives[i].player() != i) {
      throw GameError(ErrorCode::kShapeMismatch,
                      "passive game " + std::to_string(i) + " targets player " +
                          std::to_string(passives[i].player()));
    }
    payoffs[i] += passives[i].Broadcast(game.sizes());
  }
  return FiniteGame(game.space(), std::move(payoffs), game.labels());
}

double PayoffScale(const FiniteGame& game) {
  double scale = 1.0;
  for (const Tensor& t : game.payoffs()) scale = std::max(scale, t.MaxAbs());
  return scale;
}

}  // namespace gamecheck
