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

#include "gamecheck/report_json.h"

#include <string>
#include <vector>

#include "gamecheck/error.h"

namespace gamecheck {
namespace {

Json PassivesToJson(const std::vector<PassiveGame>& passives) {
  Json out = Json::array();
  for (const PassiveGame& g : passives) {
    Json item;
    item["player"] = g.player();
    item["table"] = TensorToJson(g.table());
    out.push_back(std::move(item));
  }
  return out;
}

Json TensorsToJson(const std::vector<Tensor>& tensors) {
  Json out = Json::array();
  for (const Tensor& t : tensors) out.push_back(TensorToJson(t));
  return out;
}

const Json& Field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw GameError(ErrorCode::kSchemaViolation,
                    std::string("missing field \"") + key + "\"");
  }
  return object.at(key);
}

}  // namespace

Json VerdictToJson(const TestVerdict& verdict) {
  Json out;
  out["passed"] = verdict.passed;
  out["residual"] = verdict.residual;
  out["tolerance"] = verdict.tolerance;
  out["scale"] = verdict.scale;
  out["evidence"] = verdict.evidence == Evidence::kExact ? "exact" : "numerical";
  if (verdict.witness) {
    Json w;
    const Witness& src = *verdict.witness;
    if (!src.profile.empty()) w["profile"] = src.profile;
    if (!src.players.empty()) w["players"] = src.players;
    if (!src.alternates.empty()) w["alternates"] = src.alternates;
    if (!src.point.empty()) w["point"] = src.point;
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

TestVerdict VerdictFromJson(const Json& value) {
  try {
    TestVerdict verdict;
    verdict.passed = Field(value, "passed").get<bool>();
    verdict.residual = Field(value, "residual").get<double>();
    verdict.tolerance = Field(value, "tolerance").get<double>();
    verdict.scale = Field(value, "scale").get<double>();
    const std::string evidence = Field(value, "evidence").get<std::string>();
    if (evidence == "exact") {
      verdict.evidence = Evidence::kExact;
    } else if (evidence == "numerical") {
      verdict.evidence = Evidence::kNumerical;
    } else {
      throw GameError(ErrorCode::kSchemaViolation, "unknown evidence kind");
    }
    const Json& w = Field(value, "witness");
    if (!w.is_null()) {
      Witness witness;
      if (w.contains("profile")) witness.profile = w["profile"].get<Profile>();
      if (w.contains("players")) witness.players = w["players"].get<std::vector<int>>();
      if (w.contains("alternates")) {
        witness.alternates = w["alternates"].get<std::vector<int>>();
      }
      if (w.contains("point")) witness.point = w["point"].get<std::vector<double>>();
      verdict.witness = std::move(witness);
    }
    return verdict;
  } catch (const Json::exception& e) {
    throw GameError(ErrorCode::kSchemaViolation, e.what());
  }
}

Json ReportToJson(const ClassificationReport& report) {
  Json out;
  out["players"] = report.num_players;
  out["sizes"] = report.sizes;
  out["potential"] = VerdictToJson(report.potential);
  out["zero_sum_equivalent"] = VerdictToJson(report.zero_sum_equivalent);
  out["exact_zero_sum"] = report.exact_zero_sum;
  out["common_interest"] = report.common_interest;
  return out;
}

ClassificationReport ReportFromJson(const Json& value) {
  try {
    ClassificationReport report;
    report.num_players = Field(value, "players").get<int>();
    report.sizes = Field(value, "sizes").get<Shape>();
    report.potential = VerdictFromJson(Field(value, "potential"));
    report.zero_sum_equivalent = VerdictFromJson(Field(value, "zero_sum_equivalent"));
    report.exact_zero_sum = Field(value, "exact_zero_sum").get<bool>();
    report.common_interest = Field(value, "common_interest").get<bool>();
    return report;
  } catch (const Json::exception& e) {
    throw GameError(ErrorCode::kSchemaViolation, e.what());
  }
}

Json DecompositionToJson(const PotentialDecomposition& d) {
  Json out;
  out["v"] = TensorToJson(d.potential);
  out["passives"] = PassivesToJson(d.passives);
  out["residual"] = d.residual;
  return out;
}

Json DecompositionToJson(const ZeroSumDecomposition& d) {
  Json out;
  out["vs"] = TensorsToJson(d.components);
  out["passives"] = PassivesToJson(d.passives);
  out["c"] = d.constant;
  out["residual"] = d.residual;
  return out;
}

Json RepresentationToJson(const PotentialRepresentation& r) {
  Json out;
  out["w"] = TensorToJson(r.common);
  out["passives"] = PassivesToJson(r.passives);
  out["residual"] = r.residual;
  return out;
}

Json RepresentationToJson(const ZeroSumRepresentation& r) {
  Json out;
  out["ws"] = TensorsToJson(r.components);
  out["passives"] = PassivesToJson(r.passives);
  out["c"] = r.constant;
  out["residual"] = r.residual;
  return out;
}

}  // namespace gamecheck
