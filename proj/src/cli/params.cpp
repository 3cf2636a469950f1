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

#include <charconv>
#include <cmath>

#include "subtime/cli/experiments.hpp"

namespace subtime::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_double(std::string_view s, double& out) {
  const auto t = trim(s);
  if (t.empty()) return false;
  const char* begin = t.data();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size() && std::isfinite(out);
}

bool parse_integer(std::string_view s, long long& out) {
  const auto t = trim(s);
  if (t.empty()) return false;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  return ec == std::errc() && ptr == t.data() + t.size();
}

bool parse_bool(std::string_view s, bool& out) {
  const auto t = trim(s);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return out = true, true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return out = false, true;
  return false;
}

}  // namespace

ParamTable::ParamTable(const std::vector<ParamSpec>& specs,
                       const std::map<std::string, std::string>& given) {
  for (const auto& s : specs) values_[s.name] = s.default_value;
  for (const auto& [k, v] : given) {
    if (!values_.contains(k)) throw InvalidParameter("unknown parameter '" + k + "'");
    values_[k] = v;
  }
}

const std::string& ParamTable::text(const std::string& name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw InvalidParameter("parameter '" + name + "' is not declared");
  return it->second;
}

double ParamTable::number(const std::string& name) const {
  double v = 0.0;
  if (!parse_double(text(name), v)) {
    throw InvalidParameter("parameter '" + name + "' expects a number, got '" + text(name) + "'");
  }
  return v;
}

long long ParamTable::integer(const std::string& name) const {
  long long v = 0;
  if (!parse_integer(text(name), v)) {
    throw InvalidParameter("parameter '" + name + "' expects an integer, got '" + text(name) + "'");
  }
  return v;
}

bool ParamTable::flag(const std::string& name) const {
  bool v = false;
  if (!parse_bool(text(name), v)) {
    throw InvalidParameter("parameter '" + name + "' expects true or false, got '" + text(name) + "'");
  }
  return v;
}

std::vector<std::string> ParamTable::tokens(const std::string& name) const {
  std::vector<std::string> out;
  const std::string& s = text(name);
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string::npos ? s.size() : comma;
    const auto tok = trim(std::string_view(s).substr(start, end - start));
    if (!tok.empty()) out.push_back(tok);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw InvalidParameter("parameter '" + name + "' is an empty list");
  return out;
}

std::vector<double> ParamTable::numbers(const std::string& name) const {
  std::vector<double> out;
  for (const auto& tok : tokens(name)) {
    double v = 0.0;
    if (!parse_double(tok, v)) {
      throw InvalidParameter("parameter '" + name + "' has a non-numeric entry '" + tok + "'");
    }
    out.push_back(v);
  }
  return out;
}

Json ParamTable::to_json(const std::vector<ParamSpec>& specs) const {
  Json out = Json::object();
  for (const auto& s : specs) {
    const std::string& raw = text(s.name);
    long long i = 0;
    double d = 0.0;
    bool b = false;
    if (parse_integer(raw, i)) {
      out[s.name] = i;
    } else if (parse_double(raw, d)) {
      out[s.name] = d;
    } else if (parse_bool(raw, b)) {
      out[s.name] = b;
    } else {
      out[s.name] = raw;
    }
  }
  return out;
}

}  // namespace subtime::cli
