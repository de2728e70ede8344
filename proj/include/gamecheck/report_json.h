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

#ifndef GAMECHECK_REPORT_JSON_H_
#define GAMECHECK_REPORT_JSON_H_

#include "gamecheck/classifiers.h"
#include "gamecheck/extraction.h"
#include "gamecheck/game_json.h"

namespace gamecheck {

Json VerdictToJson(const TestVerdict& verdict);
TestVerdict VerdictFromJson(const Json& value);

// { "players", "sizes", "potential", "zero_sum_equivalent",
//   "exact_zero_sum", "common_interest" }
Json ReportToJson(const ClassificationReport& report);
ClassificationReport ReportFromJson(const Json& value);

// { "v": tensor, "passives": [{ "player": i, "table": tensor }], "residual" }
Json DecompositionToJson(const PotentialDecomposition& d);
// { "vs": [tensor...], "passives": [...], "c", "residual" }
Json DecompositionToJson(const ZeroSumDecomposition& d);
// { "w": tensor, "passives": [...], "residual" }
Json RepresentationToJson(const PotentialRepresentation& r);
// { "ws": [tensor...], "passives": [...], "c", "residual" }
Json RepresentationToJson(const ZeroSumRepresentation& r);

}  // namespace gamecheck

#endif  // GAMECHECK_REPORT_JSON_H_
