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

#ifndef GAMECHECK_TENSOR_H_
#define GAMECHECK_TENSOR_H_

#include <cstddef>
#include <span>
#include <vector>

namespace gamecheck {

// Extents of a dense tensor, one per player. Axis 0 (player 1) is outermost.
using Shape = std::vector<int>;

// A strategy profile: one strategy index per player.
using Profile = std::vector<int>;

std::size_t NumElements(const Shape& shape);

// Row-major strides, in elements.
std::vector<std::size_t> Strides(const Shape& shape);

// Flat index <-> profile conversion. Flat order is lexicographic profile order.
std::size_t Flatten(const Shape& shape, std::span<const int> profile);
Profile Unflatten(const Shape& shape, std::size_t flat);

// Odometer increment in lexicographic order; returns false after the last
// profile (and leaves `profile` reset to all zeros).
bool NextProfile(const Shape& shape, Profile& profile);

// Decomposition of a row-major tensor around one axis: the tensor is viewed as
// an [outer][extent][inner] block.
struct AxisLayout {
  std::size_t outer = 1;
  std::size_t extent = 1;
  std::size_t inner = 1;
};
AxisLayout LayoutAlong(const Shape& shape, int axis);

class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, double fill = 0.0);
  Tensor(Shape shape, std::vector<double> data);

  const Shape& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  std::size_t size() const { return data_.size(); }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  double operator[](std::size_t flat) const { return data_[flat]; }
  double& operator[](std::size_t flat) { return data_[flat]; }

  // Bounds-checked access by profile; throws IndexOutOfRange.
  double at(std::span<const int> profile) const;
  double& at(std::span<const int> profile);

  double MaxAbs() const;
  bool AllFinite() const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(double factor);

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  std::size_t CheckedOffset(std::span<const int> profile) const;

  Shape shape_;
  std::vector<double> data_;
};

Tensor operator+(Tensor lhs, const Tensor& rhs);
Tensor operator-(Tensor lhs, const Tensor& rhs);
Tensor operator*(double factor, Tensor t);

// Repeats a tensor whose extent along `axis` is 1 so that it has shape
// `full`. All other extents must already match.
Tensor BroadcastAlong(const Tensor& collapsed, const Shape& full, int axis);

}  // namespace gamecheck

#endif  // GAMECHECK_TENSOR_H_
