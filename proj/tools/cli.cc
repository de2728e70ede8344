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

#include "cli.h"

#include <charconv>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gamecheck/classifiers.h"
#include "gamecheck/error.h"
#include "gamecheck/extraction.h"
#include "gamecheck/game_json.h"
#include "gamecheck/report_json.h"
#include "gamecheck/smooth_games.h"

namespace gamecheck::cli {
namespace {

struct Options {
  std::string input;
  std::optional<double> tol;
  std::string format = "text";
  std::string out_path;
  bool assert_potential = false;
  bool assert_zerosum = false;
  bool representation = false;

  // smooth
  std::string builtin;
  std::vector<std::string> params;
  std::string box;
  int grid = 16;
  std::string test = "derivative";
  double step = kDefaultStep;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by subcommands that must not leave partial output behind.
struct NotInClass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string Num(double x) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), x);
  return std::string(buffer, result.ptr);
}

template <typename T>
std::string List(const std::vector<T>& values) {
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    if constexpr (std::is_floating_point_v<T>) {
      out += Num(values[k]);
    } else {
      out += std::to_string(values[k]);
    }
  }
  return out + ")";
}

std::string VerdictLine(const std::string& name, const TestVerdict& v) {
  std::string line = name + ": " + (v.passed ? "passed" : "FAILED") +
                     " residual=" + Num(v.residual) + " tolerance=" +
                     Num(v.tolerance) + " scale=" + Num(v.scale);
  if (v.evidence == Evidence::kNumerical) line += " (numerical evidence)";
  if (v.witness) {
    const Witness& w = *v.witness;
    line += " witness:";
    if (!w.profile.empty()) line += " profile " + List(w.profile);
    if (!w.players.empty()) line += " players " + List(w.players);
    if (!w.alternates.empty()) line += " alternates " + List(w.alternates);
    if (!w.point.empty()) line += " point " + List(w.point);
  }
  return line + "\n";
}

std::string ReportText(const ClassificationReport& r) {
  std::string text = "players: " + std::to_string(r.num_players) + "\n";
  text += "sizes: " + List(r.sizes) + "\n";
  text += VerdictLine("potential", r.potential);
  text += VerdictLine("zero_sum_equivalent", r.zero_sum_equivalent);
  text += std::string("exact_zero_sum: ") + (r.exact_zero_sum ? "true" : "false") + "\n";
  text += std::string("common_interest: ") + (r.common_interest ? "true" : "false") + "\n";
  return text;
}

std::string Compact(const Tensor& t) { return TensorToJson(t).dump(); }

std::string PassivesText(const std::vector<PassiveGame>& passives) {
  std::string text;
  for (const PassiveGame& g : passives) {
    text += "passive[" + std::to_string(g.player()) + "]: " + Compact(g.table()) + "\n";
  }
  return text;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<Interval> ParseBox(const std::string& spec) {
  std::vector<Interval> box;
  if (spec.empty()) return box;
  std::stringstream stream(spec);
  std::string part;
  while (std::getline(stream, part, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw UsageError("box entries look like lo:hi");
    try {
      box.push_back({std::stod(part.substr(0, colon)), std::stod(part.substr(colon + 1))});
    } catch (const std::exception&) {
      throw UsageError("bad box entry \"" + part + "\"");
    }
  }
  return box;
}

std::map<std::string, double> ParseParams(const std::vector<std::string>& items) {
  std::map<std::string, double> params;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("parameters look like key=value");
    try {
      params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad parameter \"" + item + "\"");
    }
  }
  return params;
}

struct Output {
  std::string body;
  bool assertion_failed = false;
};

Output RunClassify(const Options& o) {
  const FiniteGame game = ParseGameJson(ReadFile(o.input));
  const ClassificationReport report = Classify(game, o.tol.value_or(kDefaultTolerance));
  Output result;
  result.body = o.format == "json" ? ReportToJson(report).dump(2) + "\n" : ReportText(report);
  result.assertion_failed = (o.assert_potential && !report.potential.passed) ||
                            (o.assert_zerosum && !report.zero_sum_equivalent.passed);
  return result;
}

Output RunCycle(const Options& o) {
  const FiniteGame game = ParseGameJson(ReadFile(o.input));
  const TestVerdict verdict = CycleTest(game, o.tol.value_or(kDefaultTolerance));
  Output result;
  result.body = o.format == "json" ? VerdictToJson(verdict).dump(2) + "\n"
                                   : VerdictLine("cycle", verdict);
  result.assertion_failed = o.assert_potential && !verdict.passed;
  return result;
}

Output RunPotential(const Options& o) {
  const FiniteGame game = ParseGameJson(ReadFile(o.input));
  const double tol = o.tol.value_or(kDefaultTolerance);
  Output result;
  try {
    if (o.representation) {
      const PotentialRepresentation r = RepresentPotential(game, tol);
      result.body = o.format == "json"
                        ? RepresentationToJson(r).dump(2) + "\n"
                        : "w: " + Compact(r.common) + "\n" + PassivesText(r.passives) +
                              "residual: " + Num(r.residual) + "\n";
    } else {
      const PotentialDecomposition d = ExtractPotential(game, tol);
      result.body = o.format == "json"
                        ? DecompositionToJson(d).dump(2) + "\n"
                        : "v: " + Compact(d.potential) + "\n" + PassivesText(d.passives) +
                              "residual: " + Num(d.residual) + "\n";
    }
  } catch (const GameError& e) {
    if (e.code() == ErrorCode::kNotAPotentialGame) throw NotInClass(e.what());
    throw;
  }
  return result;
}

Output RunZeroSum(const Options& o) {
  const FiniteGame game = ParseGameJson(ReadFile(o.input));
  const double tol = o.tol.value_or(kDefaultTolerance);
  Output result;
  auto components = [](const std::vector<Tensor>& ts, const std::string& name) {
    std::string text;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      text += name + "[" + std::to_string(i) + "]: " + Compact(ts[i]) + "\n";
    }
    return text;
  };
  try {
    if (o.representation) {
      const ZeroSumRepresentation r = RepresentZeroSum(game, tol);
      result.body = o.format == "json"
                        ? RepresentationToJson(r).dump(2) + "\n"
                        : components(r.components, "w") + PassivesText(r.passives) +
                              "c: " + Num(r.constant) + "\nresidual: " +
                              Num(r.residual) + "\n";
    } else {
      const ZeroSumDecomposition d = ZeroSumNormalize(game, tol);
      result.body = o.format == "json"
                        ? DecompositionToJson(d).dump(2) + "\n"
                        : components(d.components, "v") + PassivesText(d.passives) +
                              "c: " + Num(d.constant) + "\nresidual: " +
                              Num(d.residual) + "\n";
    }
  } catch (const GameError& e) {
    if (e.code() == ErrorCode::kNotZeroSumEquivalent) throw NotInClass(e.what());
    throw;
  }
  return result;
}

Output RunSmooth(const Options& o) {
  const SmoothGame game =
      MakeBuiltinGame(o.builtin, ParseParams(o.params), ParseBox(o.box));
  Output result;
  if (o.test == "integral") {
    GridSpec spec;
    spec.points_per_axis.assign(game.num_players(), o.grid);
    const ClassificationReport report =
        Classify(SampleGame(game, spec), o.tol.value_or(kDefaultTolerance));
    result.body = o.format == "json" ? ReportToJson(report).dump(2) + "\n" : ReportText(report);
    result.assertion_failed = (o.assert_potential && !report.potential.passed) ||
                              (o.assert_zerosum && !report.zero_sum_equivalent.passed);
    return result;
  }
  const double tol = o.tol.value_or(kDefaultDerivativeTolerance);
  const auto points = DefaultEvaluationPoints(game.box(), o.step);
  const TestVerdict potential = DerivativePotentialTest(game, points, o.step, tol);
  const TestVerdict zero_sum = DerivativeZeroSumTest(game, points, o.step, tol);
  if (o.format == "json") {
    Json doc;
    doc["builtin"] = o.builtin;
    Json box = Json::array();
    for (const Interval& iv : game.box()) box.push_back({iv.lo, iv.hi});
    doc["box"] = std::move(box);
    doc["points"] = points.size();
    doc["step"] = o.step;
    doc["potential"] = VerdictToJson(potential);
    doc["zero_sum_equivalent"] = VerdictToJson(zero_sum);
    result.body = doc.dump(2) + "\n";
  } else {
    result.body = "builtin: " + o.builtin + "\npoints: " + std::to_string(points.size()) +
                  " step: " + Num(o.step) + "\n" + VerdictLine("potential", potential) +
                  VerdictLine("zero_sum_equivalent", zero_sum);
  }
  result.assertion_failed = (o.assert_potential && !potential.passed) ||
                            (o.assert_zerosum && !zero_sum.passed);
  return result;
}

void AddCommon(CLI::App* sub, Options& o, bool with_input) {
  if (with_input) {
    sub->add_option("game", o.input, "Game file (JSON)")->required();
  }
  sub->add_option("--tol", o.tol, "Residual tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", o.out_path, "Write output to this file");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Potential and zero-sum equivalence checks for normal-form games",
               "gamecheck"};
  app.require_subcommand(1);
  Options o;

  CLI::App* classify = app.add_subcommand("classify", "Run both integral tests");
  AddCommon(classify, o, true);
  classify->add_flag("--assert-potential", o.assert_potential,
                     "Exit 1 unless the game is a potential game");
  classify->add_flag("--assert-zerosum", o.assert_zerosum,
                     "Exit 1 unless the game is zero-sum equivalent");

  CLI::App* potential = app.add_subcommand("potential", "Extract a potential function");
  AddCommon(potential, o, true);
  potential->add_flag("--representation", o.representation,
                      "Emit the common-plus-others'-passives form");

  CLI::App* zerosum = app.add_subcommand("zerosum", "Extract a zero-sum normalization");
  AddCommon(zerosum, o, true);
  zerosum->add_flag("--representation", o.representation,
                    "Emit the constant-sum-plus-others'-passives form");

  CLI::App* cycle = app.add_subcommand("cycle", "Brute-force cycle condition");
  AddCommon(cycle, o, true);
  cycle->add_flag("--assert-potential", o.assert_potential,
                  "Exit 1 unless the cycle condition holds");

  CLI::App* smooth = app.add_subcommand("smooth", "Tests on a built-in continuous game");
  AddCommon(smooth, o, false);
  smooth->add_option("--builtin", o.builtin, "Built-in game name")
      ->required()
      ->check(CLI::IsMember(BuiltinGameNames()));
  smooth->add_option("--param", o.params, "Parameter as key=value (repeatable)");
  smooth->add_option("--box", o.box, "Strategy box lo:hi[,lo:hi...]");
  smooth->add_option("--grid", o.grid, "Grid points per axis for --test integral")
      ->check(CLI::PositiveNumber);
  smooth->add_option("--test", o.test, "derivative or integral")
      ->check(CLI::IsMember({"derivative", "integral"}));
  smooth->add_option("--step", o.step, "Finite-difference base step")
      ->check(CLI::PositiveNumber);
  smooth->add_flag("--assert-potential", o.assert_potential, "Exit 1 unless potential");
  smooth->add_flag("--assert-zerosum", o.assert_zerosum, "Exit 1 unless zero-sum equivalent");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Output result;
  try {
    if (classify->parsed()) {
      result = RunClassify(o);
    } else if (potential->parsed()) {
      result = RunPotential(o);
    } else if (zerosum->parsed()) {
      result = RunZeroSum(o);
    } else if (cycle->parsed()) {
      result = RunCycle(o);
    } else {
      result = RunSmooth(o);
    }
  } catch (const NotInClass& e) {
    err << "gamecheck: " << e.what() << "\n";
    return kAssertionFailed;
  } catch (const GameError& e) {
    err << "gamecheck: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "gamecheck: " << e.what() << "\n";
    return kUsageError;
  }

  if (o.out_path.empty()) {
    out << result.body;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    file << result.body;
    if (!file) {
      err << "gamecheck: cannot write " << o.out_path << "\n";
      return kUsageError;
    }
  }
  if (result.assertion_failed) {
    err << "gamecheck: assertion failed\n";
    return kAssertionFailed;
  }
  return kOk;
}

}  // namespace gamecheck::cli
