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

#include "gamecheck/game_json.h"

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gamecheck/error.h"

namespace gamecheck {
namespace {

[[noreturn]] void Schema(const std::string& message) {
  throw GameError(ErrorCode::kSchemaViolation, message);
}

Json EncodeLevel(const Tensor& tensor, int axis, std::size_t& cursor) {
  Json out = Json::array();
  const int extent = tensor.shape()[axis];
  for (int k = 0; k < extent; ++k) {
    if (axis + 1 == tensor.rank()) {
      out.push_back(tensor[cursor++]);
    } else {
      out.push_back(EncodeLevel(tensor, axis + 1, cursor));
    }
  }
  return out;
}

void InferShape(const Json& value, Shape& shape) {
  const Json* cursor = &value;
  while (cursor->is_array()) {
    if (cursor->empty()) Schema("tensor has an empty dimension");
    shape.push_back(static_cast<int>(cursor->size()));
    cursor = &(*cursor)[0];
  }
}

void DecodeLevel(const Json& value, const Shape& shape, std::size_t axis,
                 std::vector<double>& out) {
  if (!value.is_array() || value.size() != static_cast<std::size_t>(shape[axis])) {
    Schema("ragged tensor");
  }
  for (const Json& item : value) {
    if (axis + 1 == shape.size()) {
      if (!item.is_number()) Schema("tensor entries must be numbers");
      out.push_back(item.get<double>());
    } else {
      DecodeLevel(item, shape, axis + 1, out);
    }
  }
}

}  // namespace

Json TensorToJson(const Tensor& tensor) {
  std::size_t cursor = 0;
  if (tensor.rank() == 0) return Json(tensor.size() ? tensor[0] : 0.0);
  return EncodeLevel(tensor, 0, cursor);
}

Tensor TensorFromJson(const Json& value) {
  if (!value.is_array()) Schema("tensor must be a nested array");
  Shape shape;
  InferShape(value, shape);
  std::vector<double> data;
  data.reserve(NumElements(shape));
  DecodeLevel(value, shape, 0, data);
  return Tensor(std::move(shape), std::move(data));
}

FiniteGame ParseGameJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw GameError(ErrorCode::kMalformedJson, e.what());
  }
  if (!doc.is_object()) Schema("top level must be an object");

  static const std::set<std::string> kKnown = {"players", "sizes", "payoffs",
                                               "weights", "labels"};
  for (const auto& [key, unused] : doc.items()) {
    if (!kKnown.contains(key)) Schema("unknown field \"" + key + "\"");
  }
  for (const char* required : {"players", "sizes", "payoffs"}) {
    if (!doc.contains(required)) {
      Schema(std::string("missing field \"") + required + "\"");
    }
  }

  const Json& players = doc["players"];
  if (!players.is_number_integer() || players.get<long long>() < 1) {
    Schema("\"players\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(players.get<long long>());

  const Json& sizes_json = doc["sizes"];
  if (!sizes_json.is_array() || sizes_json.size() != n) {
    Schema("\"sizes\" must list one size per player");
  }
  Shape sizes;
  for (const Json& k : sizes_json) {
    if (!k.is_number_integer() || k.get<long long>() < 1) {
      Schema("sizes must be positive integers");
    }
    sizes.push_back(static_cast<int>(k.get<long long>()));
  }

  const Json& payoffs_json = doc["payoffs"];
  if (!payoffs_json.is_array() || payoffs_json.size() != n) {
    Schema("\"payoffs\" must hold one tensor per player");
  }
  std::vector<Tensor> payoffs;
  for (const Json& t : payoffs_json) {
    Tensor tensor = TensorFromJson(t);
    if (tensor.shape() != sizes) Schema("payoff tensor shape differs from sizes");
    payoffs.push_back(std::move(tensor));
  }

  std::vector<std::vector<double>> weights;
  if (doc.contains("weights")) {
    const Json& w = doc["weights"];
    if (!w.is_array() || w.size() != n) Schema("one weight list per player");
    for (std::size_t i = 0; i < n; ++i) {
      if (!w[i].is_array() || w[i].size() != static_cast<std::size_t>(sizes[i])) {
        Schema("weight count mismatch for player " + std::to_string(i));
      }
      std::vector<double> row;
      for (const Json& x : w[i]) {
        if (!x.is_number()) Schema("weights must be numbers");
        const double value = x.get<double>();
        if (!(value > 0.0)) Schema("weights must be positive");
        row.push_back(value);
      }
      weights.push_back(std::move(row));
    }
  } else {
    for (int k : sizes) weights.emplace_back(k, 1.0);
  }

  std::optional<std::vector<std::vector<std::string>>> labels;
  if (doc.contains("labels")) {
    const Json& l = doc["labels"];
    if (!l.is_array() || l.size() != n) Schema("one label list per player");
    labels.emplace();
    for (std::size_t i = 0; i < n; ++i) {
      if (!l[i].is_array() || l[i].size() != static_cast<std::size_t>(sizes[i])) {
        Schema("label count mismatch for player " + std::to_string(i));
      }
      std::vector<std::string> row;
      for (const Json& x : l[i]) {
        if (!x.is_string()) Schema("labels must be strings");
        row.push_back(x.get<std::string>());
      }
      labels->push_back(std::move(row));
    }
  }

  try {
    return FiniteGame(WeightedStrategySpace(std::move(sizes), std::move(weights)),
                      std::move(payoffs), std::move(labels));
  } catch (const GameError& e) {
    Schema(e.what());
  }
}

std::string SerializeGame(const FiniteGame& game) {
  Json doc;
  doc["players"] = game.num_players();
  doc["sizes"] = game.sizes();
  Json payoffs = Json::array();
  for (const Tensor& t : game.payoffs()) payoffs.push_back(TensorToJson(t));
  doc["payoffs"] = std::move(payoffs);
  doc["weights"] = game.space().weights();
  if (game.labels()) doc["labels"] = *game.labels();
  return doc.dump(2) + "\n";
}

}  // namespace gamecheck
