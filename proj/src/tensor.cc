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

#include "gamecheck/tensor.h"

#include <cmath>
#include <string>
#include <utility>

#include "gamecheck/error.h"

namespace gamecheck {

std::size_t NumElements(const Shape& shape) {
  std::size_t count = 1;
  for (int extent : shape) count *= static_cast<std::size_t>(extent);
  return count;
}

std::vector<std::size_t> Strides(const Shape& shape) {
  std::vector<std::size_t> strides(shape.size(), 1);
  for (int axis = static_cast<int>(shape.size()) - 2; axis >= 0; --axis) {
    strides[axis] = strides[axis + 1] * static_cast<std::size_t>(shape[axis + 1]);
  }
  return strides;
}

std::size_t Flatten(const Shape& shape, std::span<const int> profile) {
  if (profile.size() != shape.size()) {
    throw GameError(ErrorCode::kIndexOutOfRange,
                    "profile has " + std::to_string(profile.size()) +
                        " coordinates, expected " + std::to_string(shape.size()));
  }
  std::size_t flat = 0;
  for (std::size_t axis = 0; axis < shape.size(); ++axis) {
    if (profile[axis] < 0 || profile[axis] >= shape[axis]) {
      throw GameError(ErrorCode::kIndexOutOfRange,
                      "strategy " + std::to_string(profile[axis]) +
                          " out of range for player " + std::to_string(axis));
    }
    flat = flat * static_cast<std::size_t>(shape[axis]) +
           static_cast<std::size_t>(profile[axis]);
  }
  return flat;
}

Profile Unflatten(const Shape& shape, std::size_t flat) {
  Profile profile(shape.size(), 0);
  for (int axis = static_cast<int>(shape.size()) - 1; axis >= 0; --axis) {
    const auto extent = static_cast<std::size_t>(shape[axis]);
    profile[axis] = static_cast<int>(flat % extent);
    flat /= extent;
  }
  return profile;
}

bool NextProfile(const Shape& shape, Profile& profile) {
  for (int axis = static_cast<int>(shape.size()) - 1; axis >= 0; --axis) {
    if (++profile[axis] < shape[axis]) return true;
    profile[axis] = 0;
  }
  return false;
}

AxisLayout LayoutAlong(const Shape& shape, int axis) {
  AxisLayout layout;
  for (int a = 0; a < static_cast<int>(shape.size()); ++a) {
    const auto extent = static_cast<std::size_t>(shape[a]);
    if (a < axis) {
      layout.outer *= extent;
    } else if (a == axis) {
      layout.extent = extent;
    } else {
      layout.inner *= extent;
    }
  }
  return layout;
}

Tensor::Tensor(Shape shape, double fill)
    : shape_(std::move(shape)), data_(NumElements(shape_), fill) {}

Tensor::Tensor(Shape shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  if (data_.size() != NumElements(shape_)) {
    throw GameError(ErrorCode::kShapeMismatch,
                    "tensor data has " + std::to_string(data_.size()) +
                        " entries, shape requires " +
                        std::to_string(NumElements(shape_)));
  }
}

std::size_t Tensor::CheckedOffset(std::span<const int> profile) const {
  return Flatten(shape_, profile);
}

double Tensor::at(std::span<const int> profile) const {
  return data_[CheckedOffset(profile)];
}

double& Tensor::at(std::span<const int> profile) {
  return data_[CheckedOffset(profile)];
}

double Tensor::MaxAbs() const {
  double result = 0.0;
  for (double x : data_) result = std::max(result, std::abs(x));
  return result;
}

bool Tensor::AllFinite() const {
  for (double x : data_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

namespace {
void RequireSameShape(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) {
    throw GameError(ErrorCode::kShapeMismatch, "tensor shapes differ");
  }
}
}  // namespace

Tensor& Tensor::operator+=(const Tensor& other) {
  RequireSameShape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  RequireSameShape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Tensor& Tensor::operator*=(double factor) {
  for (double& x : data_) x *= factor;
  return *this;
}

Tensor operator+(Tensor lhs, const Tensor& rhs) { return lhs += rhs; }
Tensor operator-(Tensor lhs, const Tensor& rhs) { return lhs -= rhs; }
Tensor operator*(double factor, Tensor t) { return t *= factor; }

Tensor BroadcastAlong(const Tensor& collapsed, const Shape& full, int axis) {
  if (axis < 0 || axis >= static_cast<int>(full.size()) ||
      collapsed.rank() != static_cast<int>(full.size())) {
    throw GameError(ErrorCode::kShapeMismatch, "broadcast rank mismatch");
  }
  for (int a = 0; a < collapsed.rank(); ++a) {
    const int want = a == axis ? 1 : full[a];
    if (collapsed.shape()[a] != want) {
      throw GameError(ErrorCode::kShapeMismatch,
                      "broadcast source has extent " +
                          std::to_string(collapsed.shape()[a]) + " on axis " +
                          std::to_string(a) + ", expected " +
                          std::to_string(want));
    }
  }
  const AxisLayout layout = LayoutAlong(full, axis);
  Tensor out(full);
  for (std::size_t o = 0; o < layout.outer; ++o) {
    for (std::size_t k = 0; k < layout.extent; ++k) {
      for (std::size_t in = 0; in < layout.inner; ++in) {
        out[(o * layout.extent + k) * layout.inner + in] =
            collapsed[o * layout.inner + in];
      }
    }
  }
  return out;
}

}  // namespace gamecheck
