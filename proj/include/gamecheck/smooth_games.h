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

#ifndef GAMECHECK_SMOOTH_GAMES_H_
#define GAMECHECK_SMOOTH_GAMES_H_

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gamecheck/classifiers.h"
#include "gamecheck/game.h"

namespace gamecheck {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const { return hi - lo; }
};

// Payoff over a continuous strategy profile. Must be side-effect free and safe
// to call concurrently.
using SmoothPayoff = std::function<double(std::span<const double>)>;

// n payoff callables over a bounded box of strategy intervals.
class SmoothGame {
 public:
  SmoothGame(std::vector<Interval> box, std::vector<SmoothPayoff> payoffs);

  int num_players() const { return static_cast<int>(box_.size()); }
  const std::vector<Interval>& box() const { return box_; }
  const SmoothPayoff& payoff(int player) const { return payoffs_.at(player); }
  double Evaluate(int player, std::span<const double> point) const {
    return payoffs_.at(player)(point);
  }

 private:
  std::vector<Interval> box_;
  std::vector<SmoothPayoff> payoffs_;
};

enum class QuadratureRule { kMidpoint };

struct GridSpec {
  std::vector<int> points_per_axis;
  QuadratureRule rule = QuadratureRule::kMidpoint;
};

// Base step for finite differences. Along axis a the stencil uses
// h * (1 + |point[a]|).
inline constexpr double kDefaultStep = 1e-4;
inline constexpr double kDefaultDerivativeTolerance = 1e-6;

// Nested central differences for the mixed partial over distinct `axes`:
// 2^k evaluations, O(h^2) error for smooth f. An empty `box` skips the
// stencil bounds check; otherwise throws StencilOutOfBox. Throws
// DuplicateAxis.
double MixedPartial(const SmoothPayoff& f, std::span<const double> point,
                    std::span<const int> axes, double h = kDefaultStep,
                    std::span<const Interval> box = {});

// Interior nodes of a `per_axis`-per-axis uniform midpoint grid over the box
// shrunk by the stencil margin, in lexicographic order.
std::vector<std::vector<double>> DefaultEvaluationPoints(
    std::span<const Interval> box, double h = kDefaultStep, int per_axis = 5);

// Cross-partial potential check: d2 u^(i)/ds_i ds_j == d2 u^(j)/ds_i ds_j at
// every point, every pair. Numerical evidence only. Throws WrongPlayerCount
// for n < 2.
TestVerdict DerivativePotentialTest(const SmoothGame& game,
                                    std::span<const std::vector<double>> points,
                                    double h = kDefaultStep,
                                    double tol = kDefaultDerivativeTolerance);

// sum_i d^n u^(i) / ds_1 ... ds_n == 0 at every point. Numerical evidence
// only.
TestVerdict DerivativeZeroSumTest(const SmoothGame& game,
                                  std::span<const std::vector<double>> points,
                                  double h = kDefaultStep,
                                  double tol = kDefaultDerivativeTolerance);

// Two-player contest: u^(k) = s_k^a / (s_1^a + s_2^a) * prize - c_k * s_k.
// Throws BoxNotPositive unless the box lies in (0, inf)^2, InvalidParameter
// for alpha > 1, non-finite inputs, or a non-positive prize.
SmoothGame ContestGame(double alpha, double prize, std::span<const double> costs,
                       std::vector<Interval> box);

// Evaluates every payoff on the tensor-product grid. With the midpoint rule
// node k of axis a sits at lo + (k + 1/2) * len / K and carries weight
// len / K, so the weights form the finite measure of the sampled game.
FiniteGame SampleGame(const SmoothGame& game, const GridSpec& spec);

// Built-in smooth games:
//   contest            alpha (1), prize (1), c1 (1), c2 (1); box [0.1,10]^2
//   cournot            a (10), c1 (0), c2 (0): u^(k) = s_k (a - s_1 - s_2) - c_k s_k;
//                      box [0,10]^2
//   bilinear-zero-sum  scale (1): u^(1) = scale s_1 s_2 = -u^(2); box [0,1]^2
//   bilinear-common    scale (1): u^(1) = u^(2) = scale s_1 s_2; box [0,1]^2
// Unknown names or parameters throw InvalidParameter. An empty box selects
// the default.
SmoothGame MakeBuiltinGame(const std::string& name,
                           const std::map<std::string, double>& params,
                           std::vector<Interval> box = {});
std::vector<std::string> BuiltinGameNames();

}  // namespace gamecheck

#endif  // GAMECHECK_SMOOTH_GAMES_H_
