// Copyright 2026 The Subtime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "subtime/cli/runner.hpp"

using namespace subtime::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "subtime");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("subtime_test_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json load(const fs::path& p) { return Json::parse(slurp(p)); }

}  // namespace

TEST_CASE("registry lists unique, non-empty experiments") {
  const auto& reg = registry();
  REQUIRE_FALSE(reg.empty());
  std::set<std::string> names;
  for (const auto& e : reg) {
    CHECK_FALSE(e.topic.empty());
    names.insert(e.name);
  }
  CHECK(names.size() == reg.size());
  for (const char* n : {"duality", "switch", "ac-vs-ico", "photonclock", "cascade", "wfecho",
                        "pif", "fito-vs-pif", "capacity", "rcp"}) {
    CHECK(names.contains(n));
  }
  const auto listing = cli({"list"});
  CHECK(listing.code == 0);
  CHECK(listing.out.find("cascade  ") != std::string::npos);
  CHECK(listing.out.find("decoherence cascade") != std::string::npos);
  CHECK(listing.out.find("quantum switch") != std::string::npos);
}

TEST_CASE("parameter table parsing") {
  const std::vector<ParamSpec> specs = {{"a", "1", ""}, {"b", "0.5,0.25", ""}, {"c", "yes", ""}};
  const ParamTable t(specs, {{"a", "7"}});
  CHECK(t.integer("a") == 7);
  CHECK(t.numbers("b") == std::vector<double>{0.5, 0.25});
  CHECK(t.flag("c"));
  CHECK_THROWS_AS(t.number("c"), InvalidParameter);
  CHECK_THROWS_AS(ParamTable(specs, {{"zzz", "1"}}), InvalidParameter);
  const auto j = t.to_json(specs);
  CHECK(j["a"].is_number_integer());
  CHECK(j["c"].is_boolean());
}

TEST_CASE("output formats") {
  CHECK(parse_formats("json") == std::vector<Format>{Format::Json});
  CHECK(parse_formats("svg,json,svg") == std::vector<Format>{Format::Svg, Format::Json});
  CHECK_THROWS_AS(parse_formats("json,pdf"), InvalidParameter);
  CHECK_THROWS_AS(parse_formats(""), InvalidParameter);
}

TEST_CASE("duality experiment reports sub-1e-12 deviation") {
  const auto dir = scratch("duality");
  const auto r = cli({"duality", "--omega", "1.0", "--points", "64", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto j = load(dir / "duality.json");
  CHECK(j["experiment"] == "duality");
  CHECK(j["metrics"]["max_deviation"].get<double>() < 1e-12);
  CHECK(j["config"]["omega"].get<double>() == 1.0);
  CHECK(j["series"]["t"].size() == 64);
}

TEST_CASE("perfect pif run produces no entropy") {
  const auto dir = scratch("pif");
  const auto r = cli({"pif", "--slices", "10000", "--flip", "0", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto m = load(dir / "pif.json")["metrics"];
  CHECK(m["delta_s"].get<double>() == 0.0);
  CHECK(m["conservation_check"].get<double>() == 0.0);
  CHECK(m["landauer_joules"].get<double>() == 0.0);
}

TEST_CASE("json schema, csv and svg outputs") {
  const auto dir = scratch("formats");
  const auto r = cli({"rcp", "--points", "11", "--format", "json,csv,svg", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto j = load(dir / "rcp.json");
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"experiment", "config", "metrics", "series"});
  for (const auto& [k, v] : j["metrics"].items()) CHECK_FALSE(v.is_structured());

  const auto csv = slurp(dir / "rcp.csv");
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "t,invariant_0,invariant_0.01,invariant_0.02");
  int rows = 0;
  while (std::getline(lines, row)) ++rows;
  CHECK(rows == 11);

  const auto svg = slurp(dir / "rcp.svg");
  CHECK(svg.starts_with("<svg"));
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.ends_with("</svg>\n"));
}

TEST_CASE("identical config and seed give byte-identical json") {
  for (const char* name : {"duality", "photonclock", "pif", "capacity"}) {
    const auto a = scratch(std::string(name) + "_a"), b = scratch(std::string(name) + "_b");
    REQUIRE(cli({name, "--seed", "99", "--out", a.string()}).code == 0);
    REQUIRE(cli({name, "--seed", "99", "--out", b.string()}).code == 0);
    CHECK(slurp(a / (std::string(name) + ".json")) == slurp(b / (std::string(name) + ".json")));
  }
}

TEST_CASE("different seeds change seeded experiments") {
  const auto a = scratch("seed_a"), b = scratch("seed_b");
  REQUIRE(cli({"pif", "--flip", "0.01", "--slices", "500", "--seed", "1", "--out", a.string()}).code == 0);
  REQUIRE(cli({"pif", "--flip", "0.01", "--slices", "500", "--seed", "2", "--out", b.string()}).code == 0);
  CHECK(slurp(a / "pif.json") != slurp(b / "pif.json"));
}

TEST_CASE("usage errors exit nonzero with a diagnostic") {
  const auto dir = scratch("errors");
  auto r = cli({"no-such-experiment"});
  CHECK(r.code == kUsageError);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(cli({}).code == kUsageError);
  CHECK(cli({"pif", "--flip", "1.5", "--out", dir.string()}).code == kUsageError);
  CHECK(cli({"pif", "--slices", "ten", "--out", dir.string()}).code == kUsageError);
  CHECK(cli({"pif", "--format", "pdf", "--out", dir.string()}).code == kUsageError);
  CHECK(cli({"switch", "--ua", "q", "--out", dir.string()}).code == kUsageError);
  CHECK_THROWS_AS(find_experiment("nope"), UnknownExperiment);
}

TEST_CASE("unwritable output path exits with the output error code") {
  const auto dir = scratch("blocked");
  fs::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  CHECK(cli({"wfecho", "--out", (dir / "file").string()}).code == kOutputError);
}

TEST_CASE("invariant checks are scoped to the settings they cover") {
  // Mismatched RCP generators and a noisy FITO link are outside the checked
  // invariants, so they must not report violations.
  const auto dir = scratch("scoped");
  CHECK(cli({"rcp", "--mismatched", "true", "--out", dir.string()}).code == kOk);
  CHECK(cli({"pif", "--mode", "fito", "--flip", "0.01", "--slices", "200", "--out", dir.string()}).code == kOk);
}

TEST_CASE("config file values apply unless overridden by flags") {
  const auto dir = scratch("config");
  fs::create_directories(dir);
  const auto ini = dir / "run.ini";
  std::ofstream(ini) << "experiment = pif\nseed = 5\nslices = 300\n[pif]\nflip = 0.02\n";

  REQUIRE(cli({"--config", ini.string(), "--out", dir.string()}).code == 0);
  auto c = load(dir / "pif.json")["config"];
  CHECK(c["seed"] == 5);
  CHECK(c["slices"] == 300);
  CHECK(c["flip"].get<double>() == 0.02);

  REQUIRE(cli({"pif", "--config", ini.string(), "--slices", "120", "--seed", "6", "--out",
               dir.string()}).code == 0);
  c = load(dir / "pif.json")["config"];
  CHECK(c["seed"] == 6);
  CHECK(c["slices"] == 120);
  CHECK(c["flip"].get<double>() == 0.02);

  std::ofstream(ini) << "slices = 300\nunknown-key = 1\n";
  CHECK(cli({"pif", "--config", ini.string(), "--out", dir.string()}).code == kUsageError);
  // Sections for other experiments are ignored.
  std::ofstream(ini) << "[cascade]\nhorizon = 9\n";
  CHECK(cli({"pif", "--config", ini.string(), "--slices", "50", "--out", dir.string()}).code == 0);
}

TEST_CASE("every experiment runs with defaults and its series is rectangular") {
  for (const auto& e : registry()) {
    INFO(e.name);
    ExperimentConfig cfg;
    cfg.experiment = e.name;
    const Report r = run_experiment(cfg);
    CHECK(r.violations.empty());
    CHECK(r.experiment == e.name);
    CHECK_FALSE(r.metrics.empty());
    CHECK_FALSE(r.series.empty());
    for (const auto& [name, col] : r.series.columns) CHECK(col.size() == r.series.rows());
  }
}
