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

#ifndef GAMECHECK_KERNELS_H_
#define GAMECHECK_KERNELS_H_

// OpenMP data-parallel kernels behind the public operators. Every kernel has
// a serial counterpart in reference.h that computes each output with the same
// floating-point operation order; tests require bit-identical agreement.

#include <cstdint>
#include <span>

#include "gamecheck/tensor.h"

namespace gamecheck {

// Location of the largest |value| seen by a scan. Ties go to the smallest key,
// where keys enumerate the scan in lexicographic order. `value` is -1 when the
// scan was empty.
struct ArgMaxAbs {
  double value = -1.0;
  std::uint64_t key = 0;

  void Offer(double candidate, std::uint64_t candidate_key) {
    if (candidate > value || (candidate == value && candidate_key < key)) {
      value = candidate;
      key = candidate_key;
    }
  }
  void Merge(const ArgMaxAbs& other) { Offer(other.value, other.key); }
};

namespace kernels {

// out(s) = in(s) - weighted mean of `in` along `axis`.
void CenterAlong(std::span<const double> in, std::span<double> out,
                 const Shape& shape, int axis, std::span<const double> weights,
                 double total_weight);

// Weighted mean along `axis`, written to a tensor with extent 1 on `axis`.
void MeanAlong(std::span<const double> in, std::span<double> out,
               const Shape& shape, int axis, std::span<const double> weights,
               double total_weight);

// Largest |x| and its flat index.
ArgMaxAbs MaxAbsLocate(std::span<const double> values);

// Largest |four-term cycle sum| over all unilateral 2x2 cycles between players
// i < j. The key encodes (base profile, alternate s_i, alternate s_j) as
// (flat * k_i + alt_i) * k_j + alt_j.
ArgMaxAbs CycleMax(const Tensor& payoff_i, const Tensor& payoff_j, int i, int j);

// Path-summed potential from base profile (0,...,0):
// v(s) = sum_k [u^(k)(s_1..s_k, 0..0) - u^(k)(s_1..s_{k-1}, 0..0)].
void PathPotential(std::span<const Tensor> payoffs, std::span<double> out);

}  // namespace kernels
}  // namespace gamecheck

#endif  // GAMECHECK_KERNELS_H_
