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

#include <cmath>
#include <limits>

#include "gamecheck/error.h"
#include "gamecheck/tensor.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace gamecheck {
namespace {

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

TEST(TensorTest, FlattenMatchesLexicographicOrder) {
  const Shape shape = {2, 3, 4};
  Profile s(3, 0);
  std::size_t expected = 0;
  do {
    EXPECT_EQ(Flatten(shape, s), expected);
    EXPECT_EQ(Unflatten(shape, expected), s);
    ++expected;
  } while (NextProfile(shape, s));
  EXPECT_EQ(expected, NumElements(shape));
}

TEST(TensorTest, BroadcastRepeatsAlongAxis) {
  const Tensor collapsed({2, 1}, {5, 7});
  const Tensor full = BroadcastAlong(collapsed, {2, 3}, 1);
  EXPECT_EQ(full, Tensor({2, 3}, {5, 5, 5, 7, 7, 7}));
  EXPECT_THROW(BroadcastAlong(collapsed, {3, 3}, 1), GameError);
}

TEST(GameTest, MatchingPennies) {
  const FiniteGame game = MatchingPennies();
  EXPECT_EQ(game.num_players(), 2);
  const int hh[] = {0, 0};
  EXPECT_EQ(game.Payoff(0, hh), 1.0);
  EXPECT_EQ(game.Payoff(1, hh), -1.0);
  EXPECT_TRUE(game.space().IsCountingMeasure());
  EXPECT_EQ(game.space().total_weight(0), 2.0);
}

TEST(GameTest, PayoffIndexErrors) {
  const FiniteGame game = MatchingPennies();
  const int hh[] = {0, 0};
  const int bad[] = {0, 2};
  EXPECT_EQ(CodeOf([&] { game.Payoff(2, hh); }), ErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([&] { game.Payoff(0, bad); }), ErrorCode::kIndexOutOfRange);
}

TEST(GameTest, OnePlayerGameIsValid) {
  const FiniteGame game = NewGame({3}, {Tensor({3}, {0, 1, 2})});
  const int s[] = {2};
  EXPECT_EQ(game.Payoff(0, s), 2.0);
}

TEST(GameTest, ConstructionErrors) {
  EXPECT_EQ(CodeOf([] { NewGame({2, 2}, {Tensor({2, 2}), Tensor({2, 3})}); }),
            ErrorCode::kShapeMismatch);
  EXPECT_EQ(CodeOf([] { NewGame({2, 2}, {Tensor({2, 2})}); }),
            ErrorCode::kShapeMismatch);
  EXPECT_EQ(CodeOf([] {
              NewGame({2}, {Tensor({2})}, std::vector<std::vector<double>>{{1.0, 0.0}});
            }),
            ErrorCode::kNonPositiveWeight);
  EXPECT_EQ(CodeOf([] {
              NewGame({2}, {Tensor({2}, {0.0, std::numeric_limits<double>::quiet_NaN()})});
            }),
            ErrorCode::kNonFiniteEntry);
  EXPECT_EQ(CodeOf([] { NewGame({2, 0}, {Tensor({2, 0}), Tensor({2, 0})}); }),
            ErrorCode::kShapeMismatch);
}

TEST(GameTest, PassiveTableMustCollapseOwnAxis) {
  EXPECT_EQ(CodeOf([] { PassiveGame(0, Tensor({2, 2})); }), ErrorCode::kShapeMismatch);
  const PassiveGame g(1, Tensor({2, 1}, {4, 9}));
  const int s[] = {1, 0};
  const int t[] = {1, 1};
  EXPECT_EQ(g(s), 9.0);
  EXPECT_EQ(g(t), 9.0);
}

TEST(GameTest, AddZeroPassivesIsIdentity) {
  testing::Rng rng(11);
  const FiniteGame game = testing::RandomGame(rng, {3, 2, 2}, true);
  std::vector<PassiveGame> zeros;
  for (int i = 0; i < 3; ++i) zeros.push_back(PassiveGame::Zero(game.sizes(), i));
  EXPECT_EQ(AddPassive(game, zeros), game);
}

TEST(GameTest, AddPassiveChangesOnlyOwnAxisConstantPart) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Shape shape = testing::RandomShape(rng, 3, 4);
    const FiniteGame game = testing::RandomGame(rng, shape);
    const FiniteGame shifted = AddPassive(game, testing::RandomPassives(rng, shape));
    for (int i = 0; i < 3; ++i) {
      const Tensor delta = shifted.payoff(i) - game.payoff(i);
      EXPECT_TRUE(testing::ConstantAlong(delta, i, 1e-15));
    }
  }
}

TEST(GameTest, AddPassiveRejectsMisassignedPlayers) {
  const FiniteGame game = MatchingPennies();
  std::vector<PassiveGame> swapped = {PassiveGame::Zero(game.sizes(), 1),
                                      PassiveGame::Zero(game.sizes(), 0)};
  EXPECT_EQ(CodeOf([&] { AddPassive(game, swapped); }), ErrorCode::kShapeMismatch);
}

TEST(GameTest, PayoffScaleFloorsAtOne) {
  const FiniteGame small = NewGame({2}, {Tensor({2}, {0.25, -0.5})});
  EXPECT_EQ(PayoffScale(small), 1.0);
  EXPECT_EQ(PayoffScale(testing::BattleOfSexes()), 3.0);
}

}  // namespace
}  // namespace gamecheck
