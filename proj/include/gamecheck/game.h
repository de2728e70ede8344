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

#ifndef GAMECHECK_GAME_H_
#define GAMECHECK_GAME_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gamecheck/tensor.h"

namespace gamecheck {

// Product of finite strategy sets, each carrying a finite measure given by
// strictly positive per-strategy weights. Default weights are all 1 (the
// counting measure).
class WeightedStrategySpace {
 public:
  explicit WeightedStrategySpace(Shape sizes);
  WeightedStrategySpace(Shape sizes, std::vector<std::vector<double>> weights);

  int num_players() const { return static_cast<int>(sizes_.size()); }
  const Shape& sizes() const { return sizes_; }
  int size(int player) const { return sizes_.at(player); }
  const std::vector<std::vector<double>>& weights() const { return weights_; }
  std::span<const double> weights(int player) const { return weights_.at(player); }

  // m_i(S_i), accumulated in strategy order.
  double total_weight(int player) const { return totals_.at(player); }

  bool IsCountingMeasure() const;
  bool HasUniformWeights(int player) const;

  friend bool operator==(const WeightedStrategySpace& a,
                         const WeightedStrategySpace& b) {
    return a.sizes_ == b.sizes_ && a.weights_ == b.weights_;
  }

 private:
  void Validate();

  Shape sizes_;
  std::vector<std::vector<double>> weights_;
  std::vector<double> totals_;
};

// A function of s_{-i} for one player, stored with extent 1 on that player's
// axis.
class PassiveGame {
 public:
  PassiveGame(int player, Tensor table);

  // Zero table for `player` on the given space.
  static PassiveGame Zero(const Shape& sizes, int player);

  int player() const { return player_; }
  const Tensor& table() const { return table_; }

  // Value at a full profile; the player's own coordinate is ignored.
  double operator()(std::span<const int> profile) const;

  Tensor Broadcast(const Shape& sizes) const;

  friend bool operator==(const PassiveGame&, const PassiveGame&) = default;

 private:
  int player_;
  Tensor table_;
};

// n payoff tensors over a WeightedStrategySpace. Immutable once built.
class FiniteGame {
 public:
  FiniteGame(WeightedStrategySpace space, std::vector<Tensor> payoffs,
             std::optional<std::vector<std::vector<std::string>>> labels =
                 std::nullopt);

  int num_players() const { return space_.num_players(); }
  const Shape& sizes() const { return space_.sizes(); }
  const WeightedStrategySpace& space() const { return space_; }
  const std::vector<Tensor>& payoffs() const { return payoffs_; }
  const Tensor& payoff(int player) const;
  const std::optional<std::vector<std::vector<std::string>>>& labels() const {
    return labels_;
  }

  // u^(player)(profile).
  double Payoff(int player, std::span<const int> profile) const;

  friend bool operator==(const FiniteGame&, const FiniteGame&) = default;

 private:
  WeightedStrategySpace space_;
  std::vector<Tensor> payoffs_;
  std::optional<std::vector<std::vector<std::string>>> labels_;
};

FiniteGame NewGame(Shape sizes, std::vector<Tensor> payoffs,
                   std::optional<std::vector<std::vector<double>>> weights =
                       std::nullopt);

// u^(i) + g^(i)(s_{-i}) for every player. passives[k] must target player k.
FiniteGame AddPassive(const FiniteGame& game,
                      std::span<const PassiveGame> passives);

// max(1, max_i max_s |u^(i)(s)|): the scale every residual is divided by.
double PayoffScale(const FiniteGame& game);

}  // namespace gamecheck

#endif  // GAMECHECK_GAME_H_
