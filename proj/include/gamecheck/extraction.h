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

#ifndef GAMECHECK_EXTRACTION_H_
#define GAMECHECK_EXTRACTION_H_

#include <vector>

#include "gamecheck/classifiers.h"
#include "gamecheck/game.h"
#include "gamecheck/tensor.h"

namespace gamecheck {

// u^(i) = potential + passives[i](s_{-i}) for every player, up to `residual`
// (normalized by PayoffScale). The potential is pinned to 0 at (0,...,0).
struct PotentialDecomposition {
  Tensor potential;
  std::vector<PassiveGame> passives;
  double residual = 0.0;
};

// u^(i) = components[i] + passives[i](s_{-i}) with sum_i components[i] = 0,
// up to `residual`. `constant` is sum_i components[i] at (0,...,0).
struct ZeroSumDecomposition {
  std::vector<Tensor> components;
  std::vector<PassiveGame> passives;
  double constant = 0.0;
  double residual = 0.0;
};

// u^(i)(s) = common(s) + sum_{l != i} passives[l](s_{-l}).
struct PotentialRepresentation {
  Tensor common;
  std::vector<PassiveGame> passives;
  double residual = 0.0;
};

// u^(i)(s) = components[i](s) + sum_{l != i} passives[l](s_{-l}), with
// sum_i components[i] equal to `constant` everywhere.
struct ZeroSumRepresentation {
  std::vector<Tensor> components;
  std::vector<PassiveGame> passives;
  double constant = 0.0;
  double residual = 0.0;
};

// Unchecked constructions. They always return a decomposition; the residual
// measures how far the game is from the class.
PotentialDecomposition BuildPotentialDecomposition(const FiniteGame& game);
ZeroSumDecomposition BuildZeroSumDecomposition(const FiniteGame& game);

// Checked versions: run the matching integral test first and throw
// NotAPotentialGame / NotZeroSumEquivalent if it fails or if the constructed
// residual exceeds tol.
PotentialDecomposition ExtractPotential(const FiniteGame& game,
                                        double tol = kDefaultTolerance);
ZeroSumDecomposition ZeroSumNormalize(const FiniteGame& game,
                                      double tol = kDefaultTolerance);

// Checks that every unilateral deviation changes u^(i) and `potential` by the
// same amount. Throws ShapeMismatch.
TestVerdict VerifyPotential(const FiniteGame& game, const Tensor& potential,
                            double tol = kDefaultTolerance);

PotentialRepresentation RepresentPotential(const FiniteGame& game,
                                           double tol = kDefaultTolerance);

// Throws WrongPlayerCount for one-player games.
ZeroSumRepresentation RepresentZeroSum(const FiniteGame& game,
                                       double tol = kDefaultTolerance);

}  // namespace gamecheck

#endif  // GAMECHECK_EXTRACTION_H_
