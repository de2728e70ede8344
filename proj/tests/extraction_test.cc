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

#include <cmath>
#include <vector>

#include "gamecheck/error.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace gamecheck {
namespace {

using testing::BattleOfSexes;
using testing::MatchingPennies;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GameError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected GameError";
  return ErrorCode::kInvalidParameter;
}

// Exhaustive unilateral-deviation scan written independently of
// VerifyPotential.
double WorstDeviationMismatch(const FiniteGame& game, const Tensor& v) {
  double worst = 0.0;
  Profile s(game.sizes().size(), 0);
  do {
    for (int i = 0; i < game.num_players(); ++i) {
      for (int t = 0; t < game.sizes()[i]; ++t) {
        Profile d = s;
        d[i] = t;
        const double du = game.Payoff(i, s) - game.Payoff(i, d);
        const double dv = v.at(s) - v.at(d);
        worst = std::max(worst, std::abs(du - dv));
      }
    }
  } while (NextProfile(game.sizes(), s));
  return worst;
}

TEST(ExtractPotentialTest, CommonInterestRecoversShiftedPotential) {
  const Tensor v0({2, 3}, {2, -1, 4, 0, 3, 5});
  const PotentialDecomposition d = ExtractPotential(testing::CommonInterest(v0, 2));
  EXPECT_EQ(d.residual, 0.0);
  for (std::size_t q = 0; q < v0.size(); ++q) EXPECT_EQ(d.potential[q], v0[q] - v0[0]);
}

TEST(ExtractPotentialTest, BattleOfSexes) {
  const FiniteGame game = BattleOfSexes();
  const PotentialDecomposition d = ExtractPotential(game);
  EXPECT_EQ(WorstDeviationMismatch(game, d.potential), 0.0);
  EXPECT_TRUE(VerifyPotential(game, d.potential).passed);
  EXPECT_EQ(d.potential[0], 0.0);
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(d.passives[i].player(), i);
    EXPECT_EQ(game.payoff(i), d.potential + d.passives[i].Broadcast(game.sizes()));
  }
}

TEST(ExtractPotentialTest, MatchingPenniesIsRejected) {
  EXPECT_EQ(CodeOf([] { ExtractPotential(MatchingPennies()); }),
            ErrorCode::kNotAPotentialGame);
}

TEST(ExtractPotentialTest, PlantedGamesRoundTrip) {
  testing::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Shape shape = testing::RandomShape(rng, 1 + trial % 4, 5);
    const auto planted = testing::MakePlantedPotential(rng, shape, trial % 2 == 0);
    const PotentialDecomposition d = ExtractPotential(planted.game);
    const double scale = PayoffScale(planted.game);
    EXPECT_LE(d.residual, 1e-10);
    EXPECT_LE(VerifyPotential(planted.game, d.potential).residual, 1e-10);
    EXPECT_LE(WorstDeviationMismatch(planted.game, d.potential) / scale, 1e-10);
    const double offset = d.potential[0] - planted.potential[0];
    for (std::size_t q = 0; q < d.potential.size(); ++q) {
      EXPECT_NEAR(d.potential[q] - planted.potential[q], offset, 1e-10 * scale);
    }
  }
}

TEST(VerifyPotentialTest, WrongCandidates) {
  const FiniteGame game = BattleOfSexes();
  const TestVerdict zero = VerifyPotential(game, Tensor({2, 2}));
  EXPECT_FALSE(zero.passed);
  // Player 1 deviating from (Opera, Opera) changes u by 3; the zero candidate
  // does not change.
  EXPECT_EQ(zero.raw_residual(), 3.0);
  ASSERT_TRUE(zero.witness.has_value());
  EXPECT_EQ(zero.witness->players, (std::vector<int>{0}));
  EXPECT_EQ(CodeOf([&] { VerifyPotential(game, Tensor({2, 3})); }),
            ErrorCode::kShapeMismatch);
}

TEST(ZeroSumNormalizeTest, ExactZeroSumHasZeroPassives) {
  const FiniteGame game = MatchingPennies();
  const ZeroSumDecomposition d = ZeroSumNormalize(game);
  EXPECT_EQ(d.residual, 0.0);
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(d.passives[i].table().MaxAbs(), 0.0);
    EXPECT_EQ(d.components[i], game.payoff(i));
  }
}

TEST(ZeroSumNormalizeTest, PenniesPlusPassives) {
  const FiniteGame base = MatchingPennies();
  const std::vector<PassiveGame> passives = {PassiveGame(0, Tensor({1, 2}, {3, -1})),
                                             PassiveGame(1, Tensor({2, 1}, {0.5, 8}))};
  const FiniteGame game = AddPassive(base, passives);
  const ZeroSumDecomposition d = ZeroSumNormalize(game);
  Tensor total = d.components[0] + d.components[1];
  EXPECT_LE(total.MaxAbs(), 1e-10);
  for (int i = 0; i < 2; ++i) {
    EXPECT_TRUE(testing::ConstantAlong(d.passives[i].Broadcast(game.sizes()), i, 0.0));
    EXPECT_EQ(d.passives[i].table().shape()[i], 1);
  }
}

TEST(ZeroSumNormalizeTest, NonSeparableCommonInterestIsRejected) {
  const FiniteGame game = testing::CommonInterest(Tensor({2, 2}, {1, 0, 0, 0}), 2);
  EXPECT_EQ(CodeOf([&] { ZeroSumNormalize(game); }), ErrorCode::kNotZeroSumEquivalent);
}

TEST(ZeroSumNormalizeTest, PlantedGames) {
  testing::Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const Shape shape = testing::RandomShape(rng, 2 + trial % 3, 4);
    const FiniteGame game = testing::MakePlantedZeroSum(rng, shape, trial % 2 == 0);
    const double test_residual = ZeroSumEquivalenceTest(game).residual;
    const ZeroSumDecomposition d = ZeroSumNormalize(game);
    EXPECT_LE(d.residual, test_residual + 1e-12);
    // Characterization: sum_i (u^(i) - g^(i)) vanishes.
    Tensor total(shape);
    for (int i = 0; i < game.num_players(); ++i) {
      total += game.payoff(i) - d.passives[i].Broadcast(shape);
    }
    EXPECT_LE(total.MaxAbs() / PayoffScale(game), 1e-10);
  }
}

TEST(RepresentationTest, CommonInterestWithoutPassives) {
  // v(0,0) = 0 matches the extraction's normalization, so every g is zero.
  const Tensor v({2, 2}, {0, 2, 3, 5});
  const FiniteGame game = testing::CommonInterest(v, 2);
  const PotentialRepresentation r = RepresentPotential(game);
  EXPECT_EQ(r.residual, 0.0);
  for (const PassiveGame& g : r.passives) EXPECT_EQ(g.table().MaxAbs(), 0.0);
  EXPECT_EQ(r.common, v);
}

// u^(i) = common + sum_{l != i} passives[l], checked profile by profile.
double PotentialFormMismatch(const FiniteGame& game, const PotentialRepresentation& r) {
  double worst = 0.0;
  Profile s(game.sizes().size(), 0);
  do {
    for (int i = 0; i < game.num_players(); ++i) {
      double rhs = r.common.at(s);
      for (int l = 0; l < game.num_players(); ++l) {
        if (l != i) rhs += r.passives[l](s);
      }
      worst = std::max(worst, std::abs(game.Payoff(i, s) - rhs));
    }
  } while (NextProfile(game.sizes(), s));
  return worst;
}

TEST(RepresentationTest, PotentialFormHoldsEntrywise) {
  EXPECT_EQ(PotentialFormMismatch(BattleOfSexes(), RepresentPotential(BattleOfSexes())), 0.0);
  testing::Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const auto planted =
        testing::MakePlantedPotential(rng, testing::RandomShape(rng, 2 + trial % 3, 4));
    const PotentialRepresentation r = RepresentPotential(planted.game);
    EXPECT_LE(r.residual, 1e-10);
    EXPECT_LE(PotentialFormMismatch(planted.game, r) / PayoffScale(planted.game), 1e-10);
  }
  EXPECT_EQ(CodeOf([] { RepresentPotential(MatchingPennies()); }),
            ErrorCode::kNotAPotentialGame);
}

TEST(RepresentationTest, ZeroSumFormHoldsEntrywise) {
  const ZeroSumRepresentation exact = RepresentZeroSum(MatchingPennies());
  EXPECT_EQ(exact.constant, 0.0);
  EXPECT_EQ(exact.components[0], MatchingPennies().payoff(0));

  testing::Rng rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const Shape shape = testing::RandomShape(rng, 2 + trial % 3, 4);
    const FiniteGame game = testing::MakePlantedZeroSum(rng, shape);
    const ZeroSumRepresentation r = RepresentZeroSum(game);
    const double scale = PayoffScale(game);
    Profile s(shape.size(), 0);
    do {
      double sum = 0.0;
      for (int i = 0; i < game.num_players(); ++i) {
        sum += r.components[i].at(s);
        double rhs = r.components[i].at(s);
        for (int l = 0; l < game.num_players(); ++l) {
          if (l != i) rhs += r.passives[l](s);
        }
        EXPECT_NEAR(game.Payoff(i, s), rhs, 1e-10 * scale);
      }
      EXPECT_NEAR(sum, r.constant, 1e-10 * scale);
    } while (NextProfile(shape, s));
  }
}

TEST(RepresentationTest, ZeroSumNeedsTwoPlayers) {
  const FiniteGame game = NewGame({3}, {Tensor({3}, 1.0)});
  EXPECT_EQ(CodeOf([&] { RepresentZeroSum(game); }), ErrorCode::kWrongPlayerCount);
}

TEST(CharacterizationTest, PassivesEqualizeOrCancelPayoffs) {
  testing::Rng rng(35);
  for (int trial = 0; trial < 20; ++trial) {
    const Shape shape = testing::RandomShape(rng, 3, 4);
    const auto planted = testing::MakePlantedPotential(rng, shape);
    const PotentialDecomposition d = ExtractPotential(planted.game);
    const Tensor first = planted.game.payoff(0) - d.passives[0].Broadcast(shape);
    for (int i = 1; i < 3; ++i) {
      const Tensor other = planted.game.payoff(i) - d.passives[i].Broadcast(shape);
      EXPECT_LE((first - other).MaxAbs(), 1e-10);
    }
  }
}

}  // namespace
}  // namespace gamecheck
