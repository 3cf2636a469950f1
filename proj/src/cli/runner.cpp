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

#include "subtime/cli/runner.hpp"

#include <fstream>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

namespace subtime::cli {

namespace {

const char* extension(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Svg: return "svg";
  }
  return "out";
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

struct Subcommand {
  const Experiment* experiment = nullptr;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
};

}  // namespace

std::vector<Format> parse_formats(const std::string& list) {
  std::vector<Format> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = list.find(',', start);
    const std::string tok =
        list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    Format f;
    if (tok == "json") {
      f = Format::Json;
    } else if (tok == "csv") {
      f = Format::Csv;
    } else if (tok == "svg") {
      f = Format::Svg;
    } else {
      throw InvalidParameter("unknown output format '" + tok + "' (expected json, csv or svg)");
    }
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Report run_experiment(const ExperimentConfig& cfg) {
  const Experiment& e = find_experiment(cfg.experiment);
  const ParamTable params(e.params, cfg.params);
  Report report = e.run(params, cfg.seed);
  report.experiment = e.name;
  report.config = params.to_json(e.params);
  report.config["seed"] = cfg.seed;
  return report;
}

std::vector<std::filesystem::path> write_outputs(const Report& report,
                                                 const ExperimentConfig& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + cfg.out_dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (Format f : cfg.formats) {
    std::string body;
    switch (f) {
      case Format::Json: body = to_json(report); break;
      case Format::Csv: body = to_csv(report); break;
      case Format::Svg: body = to_svg(report); break;
    }
    const auto path = cfg.out_dir / (report.experiment + "." + extension(f));
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << body;
    file.close();
    if (!file) throw std::runtime_error("cannot write " + path.string());
    written.push_back(path);
  }
  return written;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Subtime experiments on time-symmetric causal order and echoed links",
               "subtime");
  app.require_subcommand(0, 1);

  std::uint64_t seed = 2026;
  std::string out_dir = ".";
  std::string formats = "json";
  std::string config_path;
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed")->capture_default_str();
  auto* out_opt = app.add_option("--out", out_dir, "output directory")->capture_default_str();
  auto* format_opt =
      app.add_option("--format", formats, "comma-separated subset of json,csv,svg")
          ->capture_default_str();
  app.add_option("--config", config_path,
                 "INI/TOML file of key = value pairs; command-line flags take precedence")
      ->check(CLI::ExistingFile);

  auto* list = app.add_subcommand("list", "list the available experiments");

  std::vector<std::unique_ptr<Subcommand>> subs;
  for (const auto& e : registry()) {
    auto sub = std::make_unique<Subcommand>();
    sub->experiment = &e;
    sub->app = app.add_subcommand(e.name, e.topic);
    sub->app->fallthrough();
    for (const auto& p : e.params) {
      sub->values[p.name] = p.default_value;
      sub->options[p.name] =
          sub->app->add_option("--" + p.name, sub->values[p.name], p.help)->capture_default_str();
    }
    subs.push_back(std::move(sub));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    err << '\n' << app.help();
    return kUsageError;
  }

  if (list->parsed()) {
    out << list_experiments();
    return kOk;
  }

  try {
    Subcommand* chosen = nullptr;
    for (auto& s : subs) {
      if (s->app->parsed()) chosen = s.get();
    }

    std::vector<CLI::ConfigItem> items;
    if (!config_path.empty()) items = CLI::ConfigINI().from_file(config_path);
    // A config file may name the experiment when none is given on the command line.
    for (const auto& item : items) {
      if (!chosen && item.parents.empty() && item.name == "experiment") {
        const Experiment& e = find_experiment(join(item.inputs, ','));
        for (auto& s : subs) {
          if (s->experiment == &e) chosen = s.get();
        }
      }
    }
    if (!chosen) {
      err << "no experiment given; run 'subtime list' for the choices\n";
      return kUsageError;
    }

    const auto apply = [](CLI::Option* opt, std::string& target, const std::string& value) {
      if (opt == nullptr || opt->count() == 0) target = value;
    };
    for (const auto& item : items) {
      if (item.name == "++" || item.name == "--") continue;  // section markers
      const bool top = item.parents.empty();
      if (!top && !(item.parents.size() == 1 && item.parents[0] == chosen->experiment->name)) {
        continue;  // sections for other experiments
      }
      const std::string value = join(item.inputs, ',');
      if (top && item.name == "experiment") continue;
      if (top && item.name == "seed") {
        if (seed_opt->count() == 0) {
          std::string s = value;
          std::uint64_t v = 0;
          if (!CLI::detail::lexical_cast(s, v)) throw InvalidParameter("config seed is not an integer");
          seed = v;
        }
      } else if (top && item.name == "out") {
        apply(out_opt, out_dir, value);
      } else if (top && item.name == "format") {
        apply(format_opt, formats, value);
      } else if (chosen->values.contains(item.name)) {
        apply(chosen->options[item.name], chosen->values[item.name], value);
      } else {
        throw InvalidParameter("unknown config key '" + item.fullname() + "'");
      }
    }

    ExperimentConfig cfg;
    cfg.experiment = chosen->experiment->name;
    cfg.params = chosen->values;
    cfg.seed = seed;
    cfg.out_dir = out_dir;
    cfg.formats = parse_formats(formats);

    const Report report = run_experiment(cfg);
    std::vector<std::filesystem::path> written;
    try {
      written = write_outputs(report, cfg);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kOutputError;
    }
    for (const auto& p : written) out << "wrote " << p.string() << '\n';
    for (const auto& [key, value] : report.metrics.items()) {
      out << "  " << key << " = " << value.dump() << '\n';
    }
    if (!report.violations.empty()) {
      for (const auto& v : report.violations) err << "invariant violated: " << v << '\n';
      return kInvariantViolation;
    }
    return kOk;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace subtime::cli
