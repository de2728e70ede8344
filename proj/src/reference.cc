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

#include "gamecheck/reference.h"

#include <cmath>
#include <cstdint>

namespace gamecheck::reference {
namespace {

double LineMean(const Tensor& in, Profile profile, int axis,
                std::span<const double> weights, double total_weight) {
  double acc = 0.0;
  for (int k = 0; k < in.shape()[axis]; ++k) {
    profile[axis] = k;
    acc += weights[k] * in.at(profile);
  }
  return acc / total_weight;
}

}  // namespace

void CenterAlong(const Tensor& in, Tensor& out, int axis,
                 std::span<const double> weights, double total_weight) {
  Profile s(in.shape().size(), 0);
  do {
    out.at(s) = in.at(s) - LineMean(in, s, axis, weights, total_weight);
  } while (NextProfile(in.shape(), s));
}

void MeanAlong(const Tensor& in, Tensor& out, int axis,
               std::span<const double> weights, double total_weight) {
  Profile s(out.shape().size(), 0);
  do {
    out.at(s) = LineMean(in, s, axis, weights, total_weight);
  } while (NextProfile(out.shape(), s));
}

ArgMaxAbs MaxAbsLocate(std::span<const double> values) {
  ArgMaxAbs best;
  for (std::size_t q = 0; q < values.size(); ++q) best.Offer(std::abs(values[q]), q);
  return best;
}

ArgMaxAbs CycleMax(const Tensor& payoff_i, const Tensor& payoff_j, int i, int j) {
  const Shape& shape = payoff_i.shape();
  const auto k_i = static_cast<std::uint64_t>(shape[i]);
  const auto k_j = static_cast<std::uint64_t>(shape[j]);
  ArgMaxAbs best;
  Profile s(shape.size(), 0);
  std::uint64_t flat = 0;
  do {
    for (int t_i = 0; t_i < shape[i]; ++t_i) {
      if (t_i == s[i]) continue;
      for (int t_j = 0; t_j < shape[j]; ++t_j) {
        if (t_j == s[j]) continue;
        Profile a = s;  // (s_i, s_j)
        Profile b = s;  // (t_i, s_j)
        b[i] = t_i;
        Profile c = b;  // (t_i, t_j)
        c[j] = t_j;
        Profile d = s;  // (s_i, t_j)
        d[j] = t_j;
        const double leg1 = payoff_i.at(b) - payoff_i.at(a);
        const double leg2 = payoff_j.at(c) - payoff_j.at(b);
        const double leg3 = payoff_i.at(d) - payoff_i.at(c);
        const double leg4 = payoff_j.at(a) - payoff_j.at(d);
        const double cycle = ((leg1 + leg2) + leg3) + leg4;
        best.Offer(std::abs(cycle), (flat * k_i + static_cast<std::uint64_t>(t_i)) * k_j +
                                        static_cast<std::uint64_t>(t_j));
      }
    }
    ++flat;
  } while (NextProfile(shape, s));
  return best;
}

void PathPotential(std::span<const Tensor> payoffs, Tensor& out) {
  const Shape& shape = out.shape();
  Profile s(shape.size(), 0);
  do {
    Profile from(shape.size(), 0);
    double v = 0.0;
    for (std::size_t k = 0; k < shape.size(); ++k) {
      Profile to = from;
      to[k] = s[k];
      v += payoffs[k].at(to) - payoffs[k].at(from);
      from = to;
    }
    out.at(s) = v;
  } while (NextProfile(shape, s));
}

}  // namespace gamecheck::reference
