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

#include "gamecheck/kernels.h"

#include <omp.h>

#include <cmath>
#include <cstddef>
#include <vector>

namespace gamecheck::kernels {
namespace {

// Runs body(thread_best, index) over [0, count) and reduces the per-thread
// maxima. The reduction is order-independent because ArgMaxAbs::Offer is a
// total order on (value, key).
template <typename Body>
ArgMaxAbs ParallelArgMax(std::size_t count, Body body) {
  ArgMaxAbs best;
#pragma omp parallel
  {
    ArgMaxAbs local;
#pragma omp for schedule(static)
    for (std::ptrdiff_t q = 0; q < static_cast<std::ptrdiff_t>(count); ++q) {
      body(local, static_cast<std::size_t>(q));
    }
#pragma omp critical(gamecheck_argmax)
    best.Merge(local);
  }
  return best;
}

}  // namespace

void CenterAlong(std::span<const double> in, std::span<double> out,
                 const Shape& shape, int axis, std::span<const double> weights,
                 double total_weight) {
  const AxisLayout layout = LayoutAlong(shape, axis);
  const std::size_t lines = layout.outer * layout.inner;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t q = 0; q < static_cast<std::ptrdiff_t>(lines); ++q) {
    const std::size_t o = static_cast<std::size_t>(q) / layout.inner;
    const std::size_t r = static_cast<std::size_t>(q) % layout.inner;
    const std::size_t base = o * layout.extent * layout.inner + r;
    double acc = 0.0;
    for (std::size_t k = 0; k < layout.extent; ++k) {
      acc += weights[k] * in[base + k * layout.inner];
    }
    const double mean = acc / total_weight;
    for (std::size_t k = 0; k < layout.extent; ++k) {
      out[base + k * layout.inner] = in[base + k * layout.inner] - mean;
    }
  }
}

void MeanAlong(std::span<const double> in, std::span<double> out,
               const Shape& shape, int axis, std::span<const double> weights,
               double total_weight) {
  const AxisLayout layout = LayoutAlong(shape, axis);
  const std::size_t lines = layout.outer * layout.inner;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t q = 0; q < static_cast<std::ptrdiff_t>(lines); ++q) {
    const std::size_t o = static_cast<std::size_t>(q) / layout.inner;
    const std::size_t r = static_cast<std::size_t>(q) % layout.inner;
    const std::size_t base = o * layout.extent * layout.inner + r;
    double acc = 0.0;
    for (std::size_t k = 0; k < layout.extent; ++k) {
      acc += weights[k] * in[base + k * layout.inner];
    }
    out[q] = acc / total_weight;
  }
}

ArgMaxAbs MaxAbsLocate(std::span<const double> values) {
  return ParallelArgMax(values.size(), [&](ArgMaxAbs& local, std::size_t q) {
    local.Offer(std::abs(values[q]), q);
  });
}

ArgMaxAbs CycleMax(const Tensor& payoff_i, const Tensor& payoff_j, int i, int j) {
  const Shape& shape = payoff_i.shape();
  const std::vector<std::size_t> strides = Strides(shape);
  const auto k_i = static_cast<std::size_t>(shape[i]);
  const auto k_j = static_cast<std::size_t>(shape[j]);
  const auto stride_i = static_cast<std::ptrdiff_t>(strides[i]);
  const auto stride_j = static_cast<std::ptrdiff_t>(strides[j]);
  const double* ui = payoff_i.data().data();
  const double* uj = payoff_j.data().data();

  return ParallelArgMax(payoff_i.size(), [&](ArgMaxAbs& local, std::size_t b) {
    const auto s_i = static_cast<std::ptrdiff_t>((b / strides[i]) % k_i);
    const auto s_j = static_cast<std::ptrdiff_t>((b / strides[j]) % k_j);
    const auto base = static_cast<std::ptrdiff_t>(b);
    for (std::ptrdiff_t t_i = 0; t_i < static_cast<std::ptrdiff_t>(k_i); ++t_i) {
      if (t_i == s_i) continue;
      const std::ptrdiff_t di = (t_i - s_i) * stride_i;
      for (std::ptrdiff_t t_j = 0; t_j < static_cast<std::ptrdiff_t>(k_j); ++t_j) {
        if (t_j == s_j) continue;
        const std::ptrdiff_t dj = (t_j - s_j) * stride_j;
        const double leg1 = ui[base + di] - ui[base];
        const double leg2 = uj[base + di + dj] - uj[base + di];
        const double leg3 = ui[base + dj] - ui[base + di + dj];
        const double leg4 = uj[base] - uj[base + dj];
        const double cycle = ((leg1 + leg2) + leg3) + leg4;
        local.Offer(std::abs(cycle), (b * k_i + static_cast<std::size_t>(t_i)) * k_j +
                                         static_cast<std::size_t>(t_j));
      }
    }
  });
}

void PathPotential(std::span<const Tensor> payoffs, std::span<double> out) {
  const Shape& shape = payoffs[0].shape();
  const std::vector<std::size_t> strides = Strides(shape);
  const std::size_t n = shape.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t q = 0; q < static_cast<std::ptrdiff_t>(out.size()); ++q) {
    const auto flat = static_cast<std::size_t>(q);
    std::size_t from = 0;
    double v = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t s_k = (flat / strides[k]) % static_cast<std::size_t>(shape[k]);
      const std::size_t to = from + s_k * strides[k];
      v += payoffs[k][to] - payoffs[k][from];
      from = to;
    }
    out[flat] = v;
  }
}

}  // namespace gamecheck::kernels
