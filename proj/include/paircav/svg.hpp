// Copyright 2026 The paircav Authors
// SPDX-License-Identifier: Apache-2.0

// Static SVG renderings of sweep results: line plots and heatmaps. CSV is the
// data contract; these are convenience views with no interactivity.

#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "paircav/errors.hpp"

namespace paircav {

namespace svg_detail {

constexpr int kWidth = 720, kHeight = 480;
constexpr int kMarginL = 70, kMarginR = 20, kMarginT = 40, kMarginB = 50;

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(hi > lo)) {
      lo -= 1.0;
      hi += 1.0;
    }
  }
  double frac(double v) const { return (v - lo) / (hi - lo); }
};

inline const char* series_color(size_t i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  return colors[i % 6];
}

}  // namespace svg_detail

struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> xy;
};

inline void write_line_svg(const std::string& path, const std::string& title,
                           const std::string& xlabel, const std::string& ylabel,
                           const std::vector<SvgSeries>& series) {
  using namespace svg_detail;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open SVG output: " + path);

  Range xr, yr;
  for (const auto& s : series)
    for (const auto& [x, y] : s.xy) {
      xr.add(x);
      yr.add(y);
    }
  xr.pad();
  yr.pad();

  const double pw = kWidth - kMarginL - kMarginR;
  const double ph = kHeight - kMarginT - kMarginB;
  auto px = [&](double x) { return kMarginL + pw * xr.frac(x); };
  auto py = [&](double y) { return kHeight - kMarginB - ph * yr.frac(y); };

  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
      << "' font-family='sans-serif' font-size='12'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  out << "<text x='" << kWidth / 2 << "' y='20' text-anchor='middle' font-size='14'>" << title
      << "</text>\n";
  out << "<rect x='" << kMarginL << "' y='" << kMarginT << "' width='" << pw << "' height='" << ph
      << "' fill='none' stroke='black'/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    out << "<text x='" << px(fx) << "' y='" << kHeight - kMarginB + 16
        << "' text-anchor='middle'>" << num(fx) << "</text>\n";
    out << "<text x='" << kMarginL - 6 << "' y='" << py(fy) + 4 << "' text-anchor='end'>"
        << num(fy) << "</text>\n";
  }
  out << "<text x='" << kWidth / 2 << "' y='" << kHeight - 12 << "' text-anchor='middle'>"
      << xlabel << "</text>\n";
  out << "<text x='16' y='" << kHeight / 2 << "' text-anchor='middle' transform='rotate(-90 16 "
      << kHeight / 2 << ")'>" << ylabel << "</text>\n";

  for (size_t si = 0; si < series.size(); ++si) {
    out << "<polyline fill='none' stroke='" << series_color(si) << "' stroke-width='1.5' points='";
    for (const auto& [x, y] : series[si].xy)
      if (std::isfinite(y)) out << px(x) << ',' << py(y) << ' ';
    out << "'/>\n";
    out << "<text x='" << kMarginL + 8 << "' y='" << kMarginT + 16 + 16 * si << "' fill='"
        << series_color(si) << "'>" << series[si].label << "</text>\n";
  }
  out << "</svg>\n";
}

inline void write_heatmap_svg(const std::string& path, const std::string& title,
                              const std::string& xlabel, const std::string& ylabel,
                              const std::vector<double>& xs, const std::vector<double>& ys,
                              const std::vector<std::vector<double>>& values) {
  using namespace svg_detail;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open SVG output: " + path);

  Range vr;
  for (const auto& row : values)
    for (double v : row) vr.add(v);
  vr.pad();

  const double pw = kWidth - kMarginL - kMarginR;
  const double ph = kHeight - kMarginT - kMarginB;
  const double cw = pw / double(xs.size());
  const double ch = ph / double(ys.size());

  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
      << "' font-family='sans-serif' font-size='12'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  out << "<text x='" << kWidth / 2 << "' y='20' text-anchor='middle' font-size='14'>" << title
      << "</text>\n";

  for (size_t j = 0; j < ys.size(); ++j) {
    for (size_t i = 0; i < xs.size(); ++i) {
      const double v = values[j][i];
      std::string fill = "#dddddd";  // not-a-number cells
      if (std::isfinite(v)) {
        const double f = vr.frac(v);
        const int r = int(255 * f);
        const int b = int(255 * (1.0 - f));
        char buf[16];
        std::snprintf(buf, sizeof(buf), "#%02x30%02x", r, b);
        fill = buf;
      }
      out << "<rect x='" << kMarginL + cw * i << "' y='"
          << kHeight - kMarginB - ch * (j + 1) << "' width='" << cw + 0.5 << "' height='"
          << ch + 0.5 << "' fill='" << fill << "'/>\n";
    }
  }
  out << "<rect x='" << kMarginL << "' y='" << kMarginT << "' width='" << pw << "' height='" << ph
      << "' fill='none' stroke='black'/>\n";
  out << "<text x='" << kWidth / 2 << "' y='" << kHeight - 12 << "' text-anchor='middle'>"
      << xlabel << " (" << num(xs.front()) << " to " << num(xs.back()) << ")</text>\n";
  out << "<text x='16' y='" << kHeight / 2 << "' text-anchor='middle' transform='rotate(-90 16 "
      << kHeight / 2 << ")'>" << ylabel << " (" << num(ys.front()) << " to " << num(ys.back())
      << ")</text>\n";
  out << "<text x='" << kWidth - kMarginR << "' y='" << kMarginT - 6
      << "' text-anchor='end'>range " << num(vr.lo) << " to " << num(vr.hi) << "</text>\n";
  out << "</svg>\n";
}

}  // namespace paircav
