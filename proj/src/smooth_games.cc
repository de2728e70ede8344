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

#include "gamecheck/smooth_games.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gamecheck/error.h"
#include "gamecheck/kernels.h"

namespace gamecheck {
namespace {

double Recurse(const SmoothPayoff& f, std::vector<double>& x,
               std::span<const int> axes, std::span<const double> steps,
               std::size_t depth) {
  if (depth == axes.size()) return f(x);
  const int a = axes[depth];
  const double origin = x[a];
  x[a] = origin + steps[depth];
  const double plus = Recurse(f, x, axes, steps, depth + 1);
  x[a] = origin - steps[depth];
  const double minus = Recurse(f, x, axes, steps, depth + 1);
  x[a] = origin;
  return (plus - minus) / (2.0 * steps[depth]);
}

double StepAt(double h, double coordinate) { return h * (1.0 + std::abs(coordinate)); }

void CheckStep(double h) {
  if (!std::isfinite(h) || !(h > 0.0)) {
    throw GameError(ErrorCode::kInvalidParameter, "step must be finite and > 0");
  }
}

double SampledScale(const SmoothGame& game,
                    std::span<const std::vector<double>> points) {
  double scale = 1.0;
  for (const auto& p : points) {
    for (int i = 0; i < game.num_players(); ++i) {
      scale = std::max(scale, std::abs(game.Evaluate(i, p)));
    }
  }
  return scale;
}

void CheckPoints(const SmoothGame& game,
                 std::span<const std::vector<double>> points) {
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != game.num_players()) {
      throw GameError(ErrorCode::kShapeMismatch,
                      "evaluation point has the wrong dimension");
    }
  }
}

}  // namespace

SmoothGame::SmoothGame(std::vector<Interval> box, std::vector<SmoothPayoff> payoffs)
    : box_(std::move(box)), payoffs_(std::move(payoffs)) {
  if (box_.empty()) {
    throw GameError(ErrorCode::kShapeMismatch, "a game needs at least one player");
  }
  if (payoffs_.size() != box_.size()) {
    throw GameError(ErrorCode::kShapeMismatch, "one payoff callable per player");
  }
  for (const Interval& iv : box_) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || !(iv.lo < iv.hi)) {
      throw GameError(ErrorCode::kInvalidParameter,
                      "strategy intervals must be finite with lo < hi");
    }
  }
  for (const SmoothPayoff& f : payoffs_) {
    if (!f) throw GameError(ErrorCode::kInvalidParameter, "empty payoff callable");
  }
}

double MixedPartial(const SmoothPayoff& f, std::span<const double> point,
                    std::span<const int> axes, double h,
                    std::span<const Interval> box) {
  CheckStep(h);
  std::vector<int> sorted(axes.begin(), axes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GameError(ErrorCode::kDuplicateAxis, "axes must be distinct");
  }
  std::vector<double> steps;
  for (int a : axes) {
    if (a < 0 || a >= static_cast<int>(point.size())) {
      throw GameError(ErrorCode::kIndexOutOfRange, "axis outside the point");
    }
    const double step = StepAt(h, point[a]);
    if (!box.empty()) {
      const Interval& iv = box[a];
      if (point[a] - step < iv.lo || point[a] + step > iv.hi) {
        throw GameError(ErrorCode::kStencilOutOfBox,
                        "stencil on axis " + std::to_string(a) +
                            " leaves the strategy interval");
      }
    }
    steps.push_back(step);
  }
  std::vector<double> x(point.begin(), point.end());
  return Recurse(f, x, axes, steps, 0);
}

std::vector<std::vector<double>> DefaultEvaluationPoints(
    std::span<const Interval> box, double h, int per_axis) {
  CheckStep(h);
  if (per_axis < 1) {
    throw GameError(ErrorCode::kInvalidParameter, "need at least one point per axis");
  }
  std::vector<std::vector<double>> nodes;
  Shape shape;
  for (const Interval& iv : box) {
    const double margin =
        1.5 * StepAt(h, std::max(std::abs(iv.lo), std::abs(iv.hi)));
    const double lo = iv.lo + margin;
    const double hi = iv.hi - margin;
    if (!(lo < hi)) {
      throw GameError(ErrorCode::kStencilOutOfBox,
                      "interval too short for the stencil margin");
    }
    std::vector<double> axis_nodes;
    for (int k = 0; k < per_axis; ++k) {
      axis_nodes.push_back(lo + (k + 0.5) * (hi - lo) / per_axis);
    }
    nodes.push_back(std::move(axis_nodes));
    shape.push_back(per_axis);
  }
  std::vector<std::vector<double>> points;
  Profile s(shape.size(), 0);
  do {
    std::vector<double> p(shape.size());
    for (std::size_t a = 0; a < shape.size(); ++a) p[a] = nodes[a][s[a]];
    points.push_back(std::move(p));
  } while (NextProfile(shape, s));
  return points;
}

TestVerdict DerivativePotentialTest(const SmoothGame& game,
                                    std::span<const std::vector<double>> points,
                                    double h, double tol) {
  CheckTolerance(tol);
  const int n = game.num_players();
  if (n < 2) {
    throw GameError(ErrorCode::kWrongPlayerCount,
                    "the cross-partial test needs at least two players");
  }
  CheckPoints(game, points);
  double worst = 0.0;
  std::optional<Witness> witness;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int axes[] = {i, j};
      for (const auto& p : points) {
        const double di = MixedPartial(game.payoff(i), p, axes, h, game.box());
        const double dj = MixedPartial(game.payoff(j), p, axes, h, game.box());
        const double gap = std::abs(di - dj);
        if (gap > worst) {
          worst = gap;
          witness = Witness{{}, {i, j}, {}, p};
        }
      }
    }
  }
  TestVerdict verdict = MakeVerdict(worst, SampledScale(game, points), tol, witness);
  verdict.evidence = Evidence::kNumerical;
  return verdict;
}

TestVerdict DerivativeZeroSumTest(const SmoothGame& game,
                                  std::span<const std::vector<double>> points,
                                  double h, double tol) {
  CheckTolerance(tol);
  CheckPoints(game, points);
  const int n = game.num_players();
  std::vector<int> axes(n);
  for (int a = 0; a < n; ++a) axes[a] = a;
  double worst = 0.0;
  std::optional<Witness> witness;
  for (const auto& p : points) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      total += MixedPartial(game.payoff(i), p, axes, h, game.box());
    }
    if (std::abs(total) > worst) {
      worst = std::abs(total);
      witness = Witness{{}, {}, {}, p};
    }
  }
  TestVerdict verdict = MakeVerdict(worst, SampledScale(game, points), tol, witness);
  verdict.evidence = Evidence::kNumerical;
  return verdict;
}

SmoothGame ContestGame(double alpha, double prize, std::span<const double> costs,
                       std::vector<Interval> box) {
  if (box.size() != 2 || costs.size() != 2) {
    throw GameError(ErrorCode::kWrongPlayerCount, "contest games have two players");
  }
  for (const Interval& iv : box) {
    if (!(iv.lo > 0.0)) {
      throw GameError(ErrorCode::kBoxNotPositive,
                      "contest strategies must lie in (0, inf)");
    }
  }
  if (!std::isfinite(alpha) || alpha > 1.0) {
    throw GameError(ErrorCode::kInvalidParameter, "alpha must be finite and <= 1");
  }
  if (!std::isfinite(prize) || !(prize > 0.0) || !std::isfinite(costs[0]) ||
      !std::isfinite(costs[1])) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "prize must be > 0 and costs finite");
  }
  auto player = [alpha, prize](int k, double cost) {
    return [alpha, prize, k, cost](std::span<const double> s) {
      const double f1 = std::pow(s[0], alpha);
      const double f2 = std::pow(s[1], alpha);
      const double own = k == 0 ? f1 : f2;
      return own / (f1 + f2) * prize - cost * s[k];
    };
  };
  return SmoothGame(std::move(box), {player(0, costs[0]), player(1, costs[1])});
}

FiniteGame SampleGame(const SmoothGame& game, const GridSpec& spec) {
  const int n = game.num_players();
  if (static_cast<int>(spec.points_per_axis.size()) != n) {
    throw GameError(ErrorCode::kShapeMismatch, "one grid count per player");
  }
  std::vector<std::vector<double>> nodes(n);
  std::vector<std::vector<double>> weights(n);
  for (int a = 0; a < n; ++a) {
    const int count = spec.points_per_axis[a];
    if (count < 1) {
      throw GameError(ErrorCode::kInvalidParameter, "grid counts must be >= 1");
    }
    const Interval& iv = game.box()[a];
    const double width = iv.length() / count;
    for (int k = 0; k < count; ++k) {
      nodes[a].push_back(iv.lo + (k + 0.5) * width);
      weights[a].push_back(width);
    }
  }

  const Shape sizes = spec.points_per_axis;
  std::vector<Tensor> payoffs(n, Tensor(sizes));
  const std::size_t total = NumElements(sizes);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t q = 0; q < static_cast<std::ptrdiff_t>(total); ++q) {
    const Profile s = Unflatten(sizes, static_cast<std::size_t>(q));
    std::vector<double> point(n);
    for (int a = 0; a < n; ++a) point[a] = nodes[a][s[a]];
    for (int i = 0; i < n; ++i) payoffs[i][static_cast<std::size_t>(q)] = game.Evaluate(i, point);
  }
  return FiniteGame(WeightedStrategySpace(sizes, std::move(weights)),
                    std::move(payoffs));
}

namespace {

double Param(const std::map<std::string, double>& params, const std::string& key,
             double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void RejectUnknown(const std::map<std::string, double>& params,
                   std::initializer_list<const char*> known) {
  for (const auto& [key, unused] : params) {
    if (std::none_of(known.begin(), known.end(),
                     [&](const char* k) { return key == k; })) {
      throw GameError(ErrorCode::kInvalidParameter, "unknown parameter \"" + key + "\"");
    }
  }
}

}  // namespace

std::vector<std::string> BuiltinGameNames() {
  return {"bilinear-common", "bilinear-zero-sum", "contest", "cournot"};
}

SmoothGame MakeBuiltinGame(const std::string& name,
                           const std::map<std::string, double>& params,
                           std::vector<Interval> box) {
  auto box_or = [&](Interval fallback) {
    return box.empty() ? std::vector<Interval>{fallback, fallback} : box;
  };
  if (name == "contest") {
    RejectUnknown(params, {"alpha", "prize", "c1", "c2"});
    const double costs[] = {Param(params, "c1", 1.0), Param(params, "c2", 1.0)};
    return ContestGame(Param(params, "alpha", 1.0), Param(params, "prize", 1.0),
                       costs, box_or({0.1, 10.0}));
  }
  if (name == "cournot") {
    RejectUnknown(params, {"a", "c1", "c2"});
    const double a = Param(params, "a", 10.0);
    const double c1 = Param(params, "c1", 0.0);
    const double c2 = Param(params, "c2", 0.0);
    return SmoothGame(
        box_or({0.0, 10.0}),
        {[=](std::span<const double> s) { return s[0] * (a - s[0] - s[1]) - c1 * s[0]; },
         [=](std::span<const double> s) { return s[1] * (a - s[0] - s[1]) - c2 * s[1]; }});
  }
  if (name == "bilinear-zero-sum" || name == "bilinear-common") {
    RejectUnknown(params, {"scale"});
    const double k = Param(params, "scale", 1.0);
    const double sign = name == "bilinear-common" ? 1.0 : -1.0;
    return SmoothGame(
        box_or({0.0, 1.0}),
        {[=](std::span<const double> s) { return k * s[0] * s[1]; },
         [=](std::span<const double> s) { return sign * k * s[0] * s[1]; }});
  }
  throw GameError(ErrorCode::kInvalidParameter, "unknown builtin game \"" + name + "\"");
}

}  // namespace gamecheck
