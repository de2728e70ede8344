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

#include "gamecheck/classifiers.h"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "gamecheck/averaging.h"
#include "gamecheck/error.h"
#include "gamecheck/kernels.h"

namespace gamecheck {

void CheckTolerance(double tol) {
  if (!std::isfinite(tol) || !(tol > 0.0)) {
    throw GameError(ErrorCode::kInvalidTolerance,
                    "tolerance must be finite and > 0, got " + std::to_string(tol));
  }
}

TestVerdict MakeVerdict(double raw_max, double scale, double tol,
                        std::optional<Witness> witness) {
  TestVerdict verdict;
  verdict.scale = scale;
  verdict.tolerance = tol;
  verdict.residual = raw_max > 0.0 ? raw_max / scale : 0.0;
  verdict.passed = verdict.residual <= tol;
  if (verdict.residual > 0.0) verdict.witness = std::move(witness);
  return verdict;
}

TestVerdict PotentialTest(const FiniteGame& game, double tol) {
  CheckTolerance(tol);
  const double scale = PayoffScale(game);
  const int n = game.num_players();
  ArgMaxAbs best;
  std::pair<int, int> best_pair{0, 0};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Tensor diff = game.payoff(i) - game.payoff(j);
      const int axes[] = {i, j};
      const Tensor centered = CenterAxes(diff, game.space(), axes);
      const ArgMaxAbs pair_best = kernels::MaxAbsLocate(centered.data());
      if (pair_best.value > best.value ||
          (pair_best.value == best.value && pair_best.key < best.key)) {
        best = pair_best;
        best_pair = {i, j};
      }
    }
  }
  if (best.value <= 0.0) return MakeVerdict(0.0, scale, tol, std::nullopt);
  Witness witness;
  witness.profile = Unflatten(game.sizes(), best.key);
  witness.players = {best_pair.first, best_pair.second};
  return MakeVerdict(best.value, scale, tol, std::move(witness));
}

TestVerdict ZeroSumEquivalenceTest(const FiniteGame& game, double tol) {
  CheckTolerance(tol);
  const double scale = PayoffScale(game);
  Tensor total = game.payoff(0);
  for (int i = 1; i < game.num_players(); ++i) total += game.payoff(i);
  std::vector<int> all(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) all[i] = i;
  const Tensor centered = CenterAxes(total, game.space(), all);
  const ArgMaxAbs best = kernels::MaxAbsLocate(centered.data());
  if (best.value <= 0.0) return MakeVerdict(0.0, scale, tol, std::nullopt);
  Witness witness;
  witness.profile = Unflatten(game.sizes(), best.key);
  return MakeVerdict(best.value, scale, tol, std::move(witness));
}

TestVerdict CycleTest(const FiniteGame& game, double tol) {
  CheckTolerance(tol);
  const double scale = PayoffScale(game);
  const int n = game.num_players();
  ArgMaxAbs best;
  std::pair<int, int> best_pair{0, 0};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const ArgMaxAbs pair_best =
          kernels::CycleMax(game.payoff(i), game.payoff(j), i, j);
      if (pair_best.value > best.value) {
        best = pair_best;
        best_pair = {i, j};
      }
    }
  }
  if (best.value <= 0.0) return MakeVerdict(0.0, scale, tol, std::nullopt);
  const auto [i, j] = best_pair;
  const auto k_i = static_cast<std::uint64_t>(game.sizes()[i]);
  const auto k_j = static_cast<std::uint64_t>(game.sizes()[j]);
  Witness witness;
  witness.profile = Unflatten(game.sizes(), best.key / k_j / k_i);
  witness.players = {i, j};
  witness.alternates = {static_cast<int>((best.key / k_j) % k_i),
                        static_cast<int>(best.key % k_j)};
  return MakeVerdict(best.value, scale, tol, std::move(witness));
}

TestVerdict SandholmTest(const FiniteGame& game, double tol) {
  CheckTolerance(tol);
  if (game.num_players() != 2) {
    throw GameError(ErrorCode::kWrongPlayerCount,
                    "the two-player criterion needs exactly two players");
  }
  if (!game.space().HasUniformWeights(0) || !game.space().HasUniformWeights(1)) {
    throw GameError(ErrorCode::kNonUniformWeights,
                    "the two-player criterion assumes the counting measure");
  }
  const int rows = game.sizes()[0];
  const int cols = game.sizes()[1];

  // A_ij - (1/|S1|) sum_i A_ij - (1/|S2|) sum_j A_ij + (1/|S1||S2|) sum A_ij
  auto double_centered = [&](const Tensor& m) {
    std::vector<double> row_mean(rows, 0.0), col_mean(cols, 0.0);
    double grand = 0.0;
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const double x = m[static_cast<std::size_t>(r) * cols + c];
        row_mean[r] += x;
        col_mean[c] += x;
        grand += x;
      }
    }
    for (double& x : row_mean) x /= cols;
    for (double& x : col_mean) x /= rows;
    grand /= static_cast<double>(rows) * cols;
    std::vector<double> out(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        const std::size_t q = static_cast<std::size_t>(r) * cols + c;
        out[q] = m[q] - col_mean[c] - row_mean[r] + grand;
      }
    }
    return out;
  };

  const std::vector<double> lhs = double_centered(game.payoff(0));
  const std::vector<double> rhs = double_centered(game.payoff(1));
  ArgMaxAbs best;
  for (std::size_t q = 0; q < lhs.size(); ++q) best.Offer(std::abs(lhs[q] - rhs[q]), q);

  const double scale = PayoffScale(game);
  if (best.value <= 0.0) return MakeVerdict(0.0, scale, tol, std::nullopt);
  Witness witness;
  witness.profile = Unflatten(game.sizes(), best.key);
  witness.players = {0, 1};
  return MakeVerdict(best.value, scale, tol, std::move(witness));
}

ClassificationReport Classify(const FiniteGame& game, double tol) {
  CheckTolerance(tol);
  ClassificationReport report;
  report.num_players = game.num_players();
  report.sizes = game.sizes();
  report.potential = PotentialTest(game, tol);
  report.zero_sum_equivalent = ZeroSumEquivalenceTest(game, tol);

  const double bound = tol * PayoffScale(game);
  Tensor total = game.payoff(0);
  for (int i = 1; i < game.num_players(); ++i) total += game.payoff(i);
  report.exact_zero_sum = total.MaxAbs() <= bound;

  double spread = 0.0;
  for (int i = 1; i < game.num_players(); ++i) {
    spread = std::max(spread, (game.payoff(i) - game.payoff(0)).MaxAbs());
  }
  report.common_interest = spread <= bound;
  return report;
}

}  // namespace gamecheck
