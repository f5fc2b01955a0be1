// Copyright 2026 The uavlos Authors
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

// Line charts from sweep CSVs: one series per backend or policy, mean over
// seeds with standard-error bars.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "uavlos/bench.hpp"
#include "uavlos/error.hpp"
#include "uavlos/scene_io.hpp"

namespace uavlos {

struct PlotSeries {
  std::string label;
  std::vector<double> x, mean, std_error;
  std::vector<int> n;
};

struct PlotData {
  std::string variable, metric;
  std::vector<PlotSeries> series;
};

namespace plot {

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i)
    if (i == line.size() || line[i] == sep) {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

inline double to_double(std::string_view s, int line, const char* field) {
  double v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) throw ParseError("not a number: '" + std::string(s) + "'", line, field);
  return v;
}

inline std::string xml_escape(std::string_view s) {
  std::string o;
  for (char c : s) {
    switch (c) {
      case '&': o += "&amp;"; break;
      case '<': o += "&lt;"; break;
      case '>': o += "&gt;"; break;
      case '"': o += "&quot;"; break;
      default: o += c;
    }
  }
  return o;
}

inline std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace plot

// `metric` empty picks the first metric that appears in the file.
inline PlotData read_plot_data(const std::string& csv, std::string metric = {}) {
  std::istringstream in(csv);
  std::string line;
  int ln = 0;
  bool header = false;
  // label -> x -> samples
  std::map<std::string, std::map<double, std::vector<double>>> acc;
  std::vector<std::string> order;
  PlotData out;

  while (std::getline(in, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kCsvHeader) throw ParseError("unexpected CSV header", ln);
      header = true;
      continue;
    }
    const auto f = plot::split(line, ',');
    if (f.size() != 7) throw ParseError("expected 7 fields, got " + std::to_string(f.size()), ln);
    if (out.variable.empty()) out.variable = std::string(f[0]);
    if (metric.empty()) metric = std::string(f[4]);
    if (f[4] != metric) continue;
    const double x = plot::to_double(f[1], ln, "value");
    const double y = plot::to_double(f[5], ln, "metric_value");
    const std::string label(f[3]);
    if (!acc.count(label)) order.push_back(label);
    acc[label][x].push_back(y);
  }
  if (!header) throw ParseError("no CSV header");
  if (acc.empty()) throw ParseError("no data rows" + (metric.empty() ? std::string() : " for metric '" + metric + "'"));

  out.metric = metric;
  for (const auto& label : order) {
    PlotSeries s;
    s.label = label;
    for (const auto& [x, ys] : acc[label]) {
      const double n = static_cast<double>(ys.size());
      double m = 0;
      for (double y : ys) m += y / n;
      double ss = 0;
      for (double y : ys) ss += (y - m) * (y - m);
      s.x.push_back(x);
      s.mean.push_back(m);
      s.std_error.push_back(ys.size() > 1 ? std::sqrt(ss / (n - 1.0)) / std::sqrt(n) : 0.0);
      s.n.push_back(static_cast<int>(ys.size()));
    }
    out.series.push_back(std::move(s));
  }
  return out;
}

inline std::string render_svg(const PlotData& d) {
  constexpr double W = 720, H = 460, L = 80, R = 160, T = 40, B = 60;
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& s : d.series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.mean[i] - s.std_error[i]);
      y1 = std::max(y1, s.mean[i] + s.std_error[i]);
    }
  if (x1 <= x0) x0 -= 0.5, x1 += 0.5;
  if (y1 <= y0) y0 -= 0.5, y1 += 0.5;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << (L + (W - L - R) / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
    << plot::xml_escape(d.metric) << " vs " << plot::xml_escape(d.variable) << "</text>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  o << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 5; ++k) {
    const double xv = x0 + (x1 - x0) * k / 5, yv = y0 + (y1 - y0) * k / 5;
    o << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\">" << plot::tick(xv) << "</text>\n";
    o << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << plot::tick(yv) << "</text>\n";
    o << "<line x1=\"" << L << "\" y1=\"" << py(yv) << "\" x2=\"" << W - R << "\" y2=\"" << py(yv)
      << "\" stroke=\"#ddd\"/>\n";
  }
  o << "<text x=\"" << (L + (W - L - R) / 2) << "\" y=\"" << H - 16 << "\" text-anchor=\"middle\">"
    << plot::xml_escape(d.variable) << "</text>\n";

  for (std::size_t k = 0; k < d.series.size(); ++k) {
    const auto& s = d.series[k];
    const char* c = colors[k % std::size(colors)];
    o << "<g class=\"series\" data-label=\"" << plot::xml_escape(s.label) << "\">\n<polyline fill=\"none\" stroke=\"" << c
      << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) o << (i ? " " : "") << px(s.x[i]) << "," << py(s.mean[i]);
    o << "\"/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double x = px(s.x[i]), lo = py(s.mean[i] - s.std_error[i]), hi = py(s.mean[i] + s.std_error[i]);
      o << "<line class=\"errbar\" x1=\"" << x << "\" y1=\"" << lo << "\" x2=\"" << x << "\" y2=\"" << hi
        << "\" stroke=\"" << c << "\"/>";
      o << "<circle cx=\"" << x << "\" cy=\"" << py(s.mean[i]) << "\" r=\"3\" fill=\"" << c << "\"/>\n";
    }
    const double ly = T + 10 + 20.0 * static_cast<double>(k);
    o << "<line x1=\"" << W - R + 15 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 40 << "\" y2=\"" << ly
      << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>";
    o << "<text x=\"" << W - R + 46 << "\" y=\"" << ly + 4 << "\">" << plot::xml_escape(s.label) << "</text>\n</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

inline PlotData emit_plot(const std::filesystem::path& csv_path, const std::filesystem::path& svg_path,
                          const std::string& metric = {}) {
  PlotData d = read_plot_data(read_text_file(csv_path), metric);
  write_text_file(svg_path, render_svg(d));
  return d;
}

}  // namespace uavlos
