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

#ifndef GAMECHECK_CLASSIFIERS_H_
#define GAMECHECK_CLASSIFIERS_H_

#include <optional>
#include <vector>

#include "gamecheck/game.h"
#include "gamecheck/tensor.h"

namespace gamecheck {

inline constexpr double kDefaultTolerance = 1e-9;

// Where a test's largest violation occurred. Which fields are filled depends on
// the test:
//   potential / Sandholm: profile + players {i, j}
//   zero-sum equivalence: profile
//   cycle:                profile (base corner) + players {i, j} +
//                         alternates {s~_i, s~_j}
//   potential check:      profile + players {i} + alternates {s~_i}
//   derivative tests:     point (+ players {i, j} for the potential variant)
struct Witness {
  Profile profile;
  std::vector<int> players;
  std::vector<int> alternates;
  std::vector<double> point;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Finite-game tests are exact characterizations evaluated in floating point;
// derivative tests sample finitely many points and are numerical evidence only.
enum class Evidence { kExact, kNumerical };

struct TestVerdict {
  bool passed = true;
  double residual = 0.0;   // max violation divided by `scale`
  double tolerance = kDefaultTolerance;
  double scale = 1.0;      // max(1, max |payoff|)
  Evidence evidence = Evidence::kExact;
  std::optional<Witness> witness;  // present whenever residual > 0

  double raw_residual() const { return residual * scale; }

  friend bool operator==(const TestVerdict&, const TestVerdict&) = default;
};

struct ClassificationReport {
  int num_players = 0;
  Shape sizes;
  TestVerdict potential;
  TestVerdict zero_sum_equivalent;
  bool exact_zero_sum = false;   // sum_i u^(i) vanishes within tol * scale
  bool common_interest = false;  // all u^(i) equal within tol * scale

  friend bool operator==(const ClassificationReport&,
                         const ClassificationReport&) = default;
};

// Potential test: for every pair i < j, the i- and j-centered difference
// u^(i) - u^(j) must vanish. Every one-player game passes.
TestVerdict PotentialTest(const FiniteGame& game, double tol = kDefaultTolerance);

// Zero-sum equivalence test: sum_i u^(i), centered along every axis, must
// vanish.
TestVerdict ZeroSumEquivalenceTest(const FiniteGame& game,
                                   double tol = kDefaultTolerance);

// Brute-force closed-cycle check for the potential property: for every pair
// i < j and every 2x2 unilateral cycle in their strategies, the payoff
// changes collected around the cycle must sum to zero. Quartic in the
// strategy counts; kept as an independent oracle. Ignores weights.
TestVerdict CycleTest(const FiniteGame& game, double tol = kDefaultTolerance);

// Two-player double-centering criterion on payoff matrices (A, B) written
// out directly: A - row means - column means + grand mean must equal the
// same expression for B. Requires two players with uniform weights; throws
// WrongPlayerCount or NonUniformWeights.
TestVerdict SandholmTest(const FiniteGame& game, double tol = kDefaultTolerance);

ClassificationReport Classify(const FiniteGame& game,
                              double tol = kDefaultTolerance);

// Throws InvalidTolerance unless tol is finite and > 0.
void CheckTolerance(double tol);

// Builds a verdict from a raw maximum; divides by scale.
TestVerdict MakeVerdict(double raw_max, double scale, double tol,
                        std::optional<Witness> witness);

}  // namespace gamecheck

#endif  // GAMECHECK_CLASSIFIERS_H_
