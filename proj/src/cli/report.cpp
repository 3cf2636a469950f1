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

#include "subtime/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace subtime::cli {

namespace {

std::string number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string short_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

void SeriesTable::add(std::string name, std::vector<double> values) {
  if (!columns.empty() && values.size() != rows()) {
    throw std::invalid_argument("SeriesTable: column '" + name + "' has a different length");
  }
  columns.emplace_back(std::move(name), std::move(values));
}

std::string to_json(const Report& report) {
  Json doc = Json::object();
  doc["experiment"] = report.experiment;
  doc["config"] = report.config;
  doc["metrics"] = report.metrics;
  Json series = Json::object();
  for (const auto& [name, values] : report.series.columns) {
    Json col = Json::array();
    // JSON has no NaN or infinity; emit null for them.
    for (double v : values) col.push_back(std::isfinite(v) ? Json(v) : Json(nullptr));
    series[name] = std::move(col);
  }
  doc["series"] = std::move(series);
  return doc.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
  const auto& cols = report.series.columns;
  if (cols.empty()) return {};
  std::ostringstream out;
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << escape_csv(cols[c].first);
  out << '\n';
  for (std::size_t r = 0; r < report.series.rows(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out << (c ? "," : "") << number(cols[c].second[r]);
    }
    out << '\n';
  }
  return out.str();
}

std::string to_svg(const Report& report) {
  const auto& cols = report.series.columns;
  if (cols.size() < 2 || report.series.rows() == 0) return {};
  constexpr double width = 720, height = 440;
  constexpr double left = 70, right = 190, top = 40, bottom = 50;
  const double plot_w = width - left - right, plot_h = height - top - bottom;

  const auto& xs = cols.front().second;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (double x : xs) {
    if (!std::isfinite(x)) continue;
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  for (std::size_t c = 1; c < cols.size(); ++c) {
    for (double y : cols[c].second) {
      if (!std::isfinite(y)) continue;
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1;
  if (!std::isfinite(ymin)) ymin = 0, ymax = 1;
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
  const auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * plot_h; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << left << "\" y=\"24\" font-size=\"15\">" << escape_xml(report.experiment)
      << "</text>\n";
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double fx = xmin + (xmax - xmin) * k / 4.0, fy = ymin + (ymax - ymin) * k / 4.0;
    out << "<line x1=\"" << fixed(px(fx)) << "\" y1=\"" << top + plot_h << "\" x2=\""
        << fixed(px(fx)) << "\" y2=\"" << top + plot_h + 5 << "\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << fixed(px(fx)) << "\" y=\"" << top + plot_h + 18
        << "\" text-anchor=\"middle\">" << short_number(fx) << "</text>\n";
    out << "<line x1=\"" << left - 5 << "\" y1=\"" << fixed(py(fy)) << "\" x2=\"" << left
        << "\" y2=\"" << fixed(py(fy)) << "\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << fixed(py(fy) + 4)
        << "\" text-anchor=\"end\">" << short_number(fy) << "</text>\n";
  }
  out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10
      << "\" text-anchor=\"middle\">" << escape_xml(cols.front().first) << "</text>\n";

  for (std::size_t c = 1; c < cols.size(); ++c) {
    const char* colour = kPalette[(c - 1) % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t r = 0; r < xs.size(); ++r) {
      const double y = cols[c].second[r];
      if (!std::isfinite(xs[r]) || !std::isfinite(y)) continue;
      out << (first ? "" : " ") << fixed(px(xs[r])) << ',' << fixed(py(y));
      first = false;
    }
    out << "\"/>\n";
    const double ly = top + 14.0 * static_cast<double>(c);
    out << "<line x1=\"" << left + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\""
        << left + plot_w + 32 << "\" y2=\"" << ly << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << left + plot_w + 38 << "\" y=\"" << ly + 4 << "\">"
        << escape_xml(cols[c].first) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace subtime::cli
