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

#include "gamecheck/extraction.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

#include "gamecheck/averaging.h"
#include "gamecheck/error.h"
#include "gamecheck/kernels.h"

namespace gamecheck {
namespace {

// h restricted to s_axis = index, kept with extent 1 on that axis.
Tensor SliceAt(const Tensor& h, int axis, int index) {
  const AxisLayout layout = LayoutAlong(h.shape(), axis);
  Shape collapsed = h.shape();
  collapsed[axis] = 1;
  Tensor out(std::move(collapsed));
  for (std::size_t o = 0; o < layout.outer; ++o) {
    for (std::size_t r = 0; r < layout.inner; ++r) {
      out[o * layout.inner + r] =
          h[(o * layout.extent + static_cast<std::size_t>(index)) * layout.inner + r];
    }
  }
  return out;
}

std::vector<Tensor> BroadcastAll(const std::vector<PassiveGame>& passives,
                                 const Shape& sizes) {
  std::vector<Tensor> full;
  full.reserve(passives.size());
  for (const PassiveGame& g : passives) full.push_back(g.Broadcast(sizes));
  return full;
}

// sum over l != skip of terms[l], accumulated in player order.
Tensor SumExcept(const std::vector<Tensor>& terms, std::size_t skip,
                 const Shape& sizes) {
  Tensor total(sizes);
  for (std::size_t l = 0; l < terms.size(); ++l) {
    if (l != skip) total += terms[l];
  }
  return total;
}

}  // namespace

PotentialDecomposition BuildPotentialDecomposition(const FiniteGame& game) {
  const Shape& sizes = game.sizes();
  PotentialDecomposition out;
  out.potential = Tensor(sizes);
  kernels::PathPotential(game.payoffs(), out.potential.data());

  double worst = 0.0;
  for (int i = 0; i < game.num_players(); ++i) {
    const Tensor diff = game.payoff(i) - out.potential;
    out.passives.emplace_back(i, SliceAt(diff, i, 0));
    const Tensor mismatch = diff - out.passives.back().Broadcast(sizes);
    worst = std::max(worst, mismatch.MaxAbs());
  }
  out.residual = worst / PayoffScale(game);
  return out;
}

PotentialDecomposition ExtractPotential(const FiniteGame& game, double tol) {
  const TestVerdict test = PotentialTest(game, tol);
  if (!test.passed) {
    throw GameError(ErrorCode::kNotAPotentialGame,
                    "potential test residual " + std::to_string(test.residual) +
                        " exceeds tolerance");
  }
  PotentialDecomposition out = BuildPotentialDecomposition(game);
  if (out.residual > tol) {
    throw GameError(ErrorCode::kNotAPotentialGame,
                    "path-summed potential leaves residual " +
                        std::to_string(out.residual));
  }
  return out;
}

TestVerdict VerifyPotential(const FiniteGame& game, const Tensor& potential,
                            double tol) {
  CheckTolerance(tol);
  if (potential.shape() != game.sizes()) {
    throw GameError(ErrorCode::kShapeMismatch,
                    "potential shape does not match strategy sizes");
  }
  const Shape& sizes = game.sizes();
  const std::vector<std::size_t> strides = Strides(sizes);
  ArgMaxAbs best;
  int best_player = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    const Tensor diff = game.payoff(i) - potential;
    const auto k = static_cast<std::size_t>(sizes[i]);
    ArgMaxAbs player_best;
    for (std::size_t flat = 0; flat < diff.size(); ++flat) {
      const std::size_t s_i = (flat / strides[i]) % k;
      for (std::size_t t = 0; t < k; ++t) {
        if (t == s_i) continue;
        const std::size_t other = flat + t * strides[i] - s_i * strides[i];
        player_best.Offer(std::abs(diff[flat] - diff[other]), flat * k + t);
      }
    }
    if (player_best.value > best.value) {
      best = player_best;
      best_player = i;
    }
  }
  const double scale = PayoffScale(game);
  if (best.value <= 0.0) return MakeVerdict(0.0, scale, tol, std::nullopt);
  const auto k = static_cast<std::uint64_t>(sizes[best_player]);
  Witness witness;
  witness.profile = Unflatten(sizes, best.key / k);
  witness.players = {best_player};
  witness.alternates = {static_cast<int>(best.key % k)};
  return MakeVerdict(best.value, scale, tol, std::move(witness));
}

ZeroSumDecomposition BuildZeroSumDecomposition(const FiniteGame& game) {
  const Shape& sizes = game.sizes();
  const int n = game.num_players();
  Tensor remainder = game.payoff(0);
  for (int i = 1; i < n; ++i) remainder += game.payoff(i);

  // Peel off g^(1) = mean_1(U), then g^(j) = mean_j(T_1 ... T_{j-1} U); each
  // is a function of s_{-j}, and U - sum_j g^(j) = T_1 ... T_n U.
  ZeroSumDecomposition out;
  for (int j = 0; j < n; ++j) {
    out.passives.emplace_back(j, MeanAlong(remainder, game.space(), j));
    remainder = Center(remainder, game.space(), j);
  }

  Tensor total(sizes);
  for (int i = 0; i < n; ++i) {
    out.components.push_back(game.payoff(i) - out.passives[i].Broadcast(sizes));
    total += out.components.back();
  }
  out.constant = total[0];
  out.residual = total.MaxAbs() / PayoffScale(game);
  return out;
}

ZeroSumDecomposition ZeroSumNormalize(const FiniteGame& game, double tol) {
  const TestVerdict test = ZeroSumEquivalenceTest(game, tol);
  if (!test.passed) {
    throw GameError(ErrorCode::kNotZeroSumEquivalent,
                    "zero-sum equivalence residual " +
                        std::to_string(test.residual) + " exceeds tolerance");
  }
  ZeroSumDecomposition out = BuildZeroSumDecomposition(game);
  if (out.residual > tol) {
    throw GameError(ErrorCode::kNotZeroSumEquivalent,
                    "normalized components leave residual " +
                        std::to_string(out.residual));
  }
  return out;
}

PotentialRepresentation RepresentPotential(const FiniteGame& game, double tol) {
  const PotentialDecomposition d = ExtractPotential(game, tol);
  const Shape& sizes = game.sizes();
  const int n = game.num_players();

  // common = v + sum_l g^(l); then u^(i) = common - sum_{l != i} g^(l), so the
  // representation's passives are -g^(l).
  PotentialRepresentation out;
  out.common = d.potential;
  for (const PassiveGame& g : d.passives) out.common += g.Broadcast(sizes);
  for (const PassiveGame& g : d.passives) {
    out.passives.emplace_back(g.player(), -1.0 * g.table());
  }

  const std::vector<Tensor> full = BroadcastAll(out.passives, sizes);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Tensor rebuilt = out.common + SumExcept(full, i, sizes);
    worst = std::max(worst, (game.payoff(i) - rebuilt).MaxAbs());
  }
  out.residual = worst / PayoffScale(game);
  if (out.residual > tol) {
    throw GameError(ErrorCode::kNotAPotentialGame,
                    "representation residual " + std::to_string(out.residual));
  }
  return out;
}

ZeroSumRepresentation RepresentZeroSum(const FiniteGame& game, double tol) {
  const int n = game.num_players();
  if (n < 2) {
    throw GameError(ErrorCode::kWrongPlayerCount,
                    "the zero-sum representation needs at least two players");
  }
  const ZeroSumDecomposition d = ZeroSumNormalize(game, tol);
  const Shape& sizes = game.sizes();

  ZeroSumRepresentation out;
  for (const PassiveGame& g : d.passives) {
    out.passives.emplace_back(g.player(), (1.0 / (n - 1)) * g.table());
  }
  const std::vector<Tensor> full = BroadcastAll(out.passives, sizes);

  Tensor total(sizes);
  for (int i = 0; i < n; ++i) {
    out.components.push_back(game.payoff(i) - SumExcept(full, i, sizes));
    total += out.components.back();
  }
  out.constant = total[0];

  double worst = 0.0;
  for (std::size_t q = 0; q < total.size(); ++q) {
    worst = std::max(worst, std::abs(total[q] - out.constant));
  }
  for (int i = 0; i < n; ++i) {
    const Tensor rebuilt = out.components[i] + SumExcept(full, i, sizes);
    worst = std::max(worst, (game.payoff(i) - rebuilt).MaxAbs());
  }
  out.residual = worst / PayoffScale(game);
  if (out.residual > tol) {
    throw GameError(ErrorCode::kNotZeroSumEquivalent,
                    "representation residual " + std::to_string(out.residual));
  }
  return out;
}

}  // namespace gamecheck
