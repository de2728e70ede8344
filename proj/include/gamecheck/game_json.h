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

#ifndef GAMECHECK_GAME_JSON_H_
#define GAMECHECK_GAME_JSON_H_

#include <string>
#include <string_view>

#include "json.hpp"

#include "gamecheck/game.h"
#include "gamecheck/tensor.h"

namespace gamecheck {

using Json = nlohmann::ordered_json;

// Game interchange format:
//   { "players": n, "sizes": [k1,...,kn], "payoffs": [T1,...,Tn],
//     "weights": [[...],...] (optional), "labels": [[...],...] (optional) }
// Each Ti is a nested array with player 1's strategy as the outermost index.
// Unknown fields are rejected. Throws MalformedJson or SchemaViolation.
FiniteGame ParseGameJson(std::string_view text);

// Always writes "weights"; writes "labels" only when present. Output is
// indented and newline-terminated, and doubles print in shortest round-trip
// form, so ParseGameJson(SerializeGame(g)) == g exactly.
std::string SerializeGame(const FiniteGame& game);

// Nested-array encoding shared by every output schema.
Json TensorToJson(const Tensor& tensor);
Tensor TensorFromJson(const Json& value);

}  // namespace gamecheck

#endif  // GAMECHECK_GAME_JSON_H_
