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

#include "test_util.h"

#include <cmath>

namespace gamecheck::testing {

Tensor RandomTensor(Rng& rng, const Shape& shape, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  Tensor t(shape);
  for (double& x : t.data()) x = dist(rng);
  return t;
}

Shape RandomShape(Rng& rng, int players, int max_size) {
  std::uniform_int_distribution<int> dist(1, max_size);
  Shape shape(players);
  for (int& k : shape) k = dist(rng);
  return shape;
}

std::vector<std::vector<double>> RandomWeights(Rng& rng, const Shape& shape) {
  std::uniform_real_distribution<double> dist(0.1, 3.0);
  std::vector<std::vector<double>> weights;
  for (int k : shape) {
    std::vector<double> row(k);
    for (double& w : row) w = dist(rng);
    weights.push_back(std::move(row));
  }
  return weights;
}

std::vector<PassiveGame> RandomPassives(Rng& rng, const Shape& shape,
                                        double magnitude) {
  std::vector<PassiveGame> passives;
  for (int i = 0; i < static_cast<int>(shape.size()); ++i) {
    Shape collapsed = shape;
    collapsed[i] = 1;
    passives.emplace_back(i, RandomTensor(rng, collapsed, -magnitude, magnitude));
  }
  return passives;
}

namespace {
WeightedStrategySpace MakeSpace(Rng& rng, const Shape& shape, bool random_weights) {
  return random_weights ? WeightedStrategySpace(shape, RandomWeights(rng, shape))
                        : WeightedStrategySpace(shape);
}
}  // namespace

FiniteGame RandomGame(Rng& rng, const Shape& shape, bool random_weights) {
  WeightedStrategySpace space = MakeSpace(rng, shape, random_weights);
  std::vector<Tensor> payoffs;
  for (std::size_t i = 0; i < shape.size(); ++i) payoffs.push_back(RandomTensor(rng, shape));
  return FiniteGame(std::move(space), std::move(payoffs));
}

PlantedPotential MakePlantedPotential(Rng& rng, const Shape& shape,
                                      bool random_weights) {
  WeightedStrategySpace space = MakeSpace(rng, shape, random_weights);
  Tensor v = RandomTensor(rng, shape);
  std::vector<Tensor> payoffs;
  for (const PassiveGame& g : RandomPassives(rng, shape)) {
    payoffs.push_back(v + g.Broadcast(shape));
  }
  return {FiniteGame(std::move(space), std::move(payoffs)), std::move(v)};
}

FiniteGame MakePlantedZeroSum(Rng& rng, const Shape& shape, bool random_weights) {
  WeightedStrategySpace space = MakeSpace(rng, shape, random_weights);
  const int n = static_cast<int>(shape.size());
  std::vector<Tensor> parts;
  Tensor last(shape);
  for (int i = 0; i + 1 < n; ++i) {
    parts.push_back(RandomTensor(rng, shape));
    last -= parts.back();
  }
  parts.push_back(std::move(last));
  const std::vector<PassiveGame> passives = RandomPassives(rng, shape);
  for (int i = 0; i < n; ++i) parts[i] += passives[i].Broadcast(shape);
  return FiniteGame(std::move(space), std::move(parts));
}

Tensor DoublyCenteredNoise(Rng& rng, const WeightedStrategySpace& space) {
  const Shape& shape = space.sizes();
  Tensor t = RandomTensor(rng, shape);
  // Independent of the library operators: explicit weighted line means.
  for (int axis = 0; axis < space.num_players(); ++axis) {
    Profile s(shape.size(), 0);
    Tensor next = t;
    do {
      Profile p = s;
      double acc = 0.0;
      for (int k = 0; k < shape[axis]; ++k) {
        p[axis] = k;
        acc += space.weights(axis)[k] * t.at(p);
      }
      next.at(s) = t.at(s) - acc / space.total_weight(axis);
    } while (NextProfile(shape, s));
    t = std::move(next);
  }
  t *= 1.0 / t.MaxAbs();
  return t;
}

FiniteGame MatchingPennies() {
  return NewGame({2, 2}, {Tensor({2, 2}, {1, -1, -1, 1}), Tensor({2, 2}, {-1, 1, 1, -1})});
}

FiniteGame BattleOfSexes() {
  return NewGame({2, 2}, {Tensor({2, 2}, {3, 0, 0, 2}), Tensor({2, 2}, {2, 0, 0, 3})});
}

FiniteGame CommonInterest(const Tensor& v, int players) {
  return NewGame(v.shape(), std::vector<Tensor>(players, v));
}

double CycleSum2p(const FiniteGame& game, int s1, int t1, int s2, int t2) {
  auto u = [&](int player, int a, int b) {
    const int profile[] = {a, b};
    return game.Payoff(player, profile);
  };
  return (u(0, t1, s2) - u(0, s1, s2)) + (u(1, t1, t2) - u(1, t1, s2)) +
         (u(0, s1, t2) - u(0, t1, t2)) + (u(1, s1, s2) - u(1, s1, t2));
}

bool ConstantAlong(const Tensor& u, int axis, double tol) {
  Profile s(u.shape().size(), 0);
  do {
    Profile p = s;
    p[axis] = 0;
    if (std::abs(u.at(s) - u.at(p)) > tol) return false;
  } while (NextProfile(u.shape(), s));
  return true;
}

}  // namespace gamecheck::testing
