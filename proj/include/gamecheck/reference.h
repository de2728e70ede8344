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

#ifndef GAMECHECK_REFERENCE_H_
#define GAMECHECK_REFERENCE_H_

// Straightforward serial implementations of the kernels in kernels.h, written
// against explicit strategy profiles. Used by tests and benchmarks only.

#include <span>

#include "gamecheck/kernels.h"
#include "gamecheck/tensor.h"

namespace gamecheck::reference {

void CenterAlong(const Tensor& in, Tensor& out, int axis,
                 std::span<const double> weights, double total_weight);

void MeanAlong(const Tensor& in, Tensor& out, int axis,
               std::span<const double> weights, double total_weight);

ArgMaxAbs MaxAbsLocate(std::span<const double> values);

ArgMaxAbs CycleMax(const Tensor& payoff_i, const Tensor& payoff_j, int i, int j);

void PathPotential(std::span<const Tensor> payoffs, Tensor& out);

}  // namespace gamecheck::reference

#endif  // GAMECHECK_REFERENCE_H_
