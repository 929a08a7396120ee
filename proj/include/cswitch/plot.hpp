// Copyright 2026 the causal-switch developers
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

#pragma once

#include <sstream>

#include "cswitch/sweep.hpp"

namespace cswitch {

namespace detail {

// Capacities are plotted on a log axis; values at or below zero (the
// definite-order curve hits exactly 0 at q = 1) clamp to this floor.
inline constexpr double plot_floor = 1e-12;

inline double log_chi(double chi) { return std::log10(std::max(chi, plot_floor)); }

inline std::string format_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

// Render a sweep as a self-contained SVG: capacity on a log scale against
// the channel strength. Solid black is the switched capacity, blue the
// definite-order one, the orange polygon the visibility band and red dots
// the measured reconstruction. Output is byte-deterministic for a given
// table.
inline std::string render_sweep_svg(const SweepTable& table) {
  if (table.rows.empty()) throw std::invalid_argument("cannot plot an empty sweep");

  constexpr double width = 880.0, height = 560.0;
  constexpr double ml = 80.0, mr = 24.0, mt = 24.0, mb = 56.0;
  const double pw = width - ml - mr;
  const double ph = height - mt - mb;

  const double q_lo = table.rows.front().q;
  const double q_hi = table.rows.back().q;
  const double q_span = (q_hi > q_lo) ? (q_hi - q_lo) : 1.0;

  double y_lo = 1e300, y_hi = -1e300;
  const auto see = [&](double chi) {
    const double y = detail::log_chi(chi);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  };
  for (const SweepRow& r : table.rows) {
    see(r.chi_switch);
    see(r.chi_classical);
    if (r.chi_vis_low) see(*r.chi_vis_low);
    if (r.chi_vis_high) see(*r.chi_vis_high);
    if (r.chi_exp) see(*r.chi_exp);
  }
  y_lo -= 0.3;
  y_hi += 0.3;

  const auto px = [&](double q) { return ml + pw * (q - q_lo) / q_span; };
  const auto py = [&](double chi) {
    return mt + ph * (y_hi - detail::log_chi(chi)) / (y_hi - y_lo);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  // axes
  svg << "<line x1=\"" << detail::format_coord(ml) << "\" y1=\""
      << detail::format_coord(mt + ph) << "\" x2=\"" << detail::format_coord(ml + pw)
      << "\" y2=\"" << detail::format_coord(mt + ph)
      << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << detail::format_coord(ml) << "\" y1=\""
      << detail::format_coord(mt) << "\" x2=\"" << detail::format_coord(ml) << "\" y2=\""
      << detail::format_coord(mt + ph)
      << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  for (int k = 0; k <= 5; ++k) {
    const double q = q_lo + q_span * k / 5.0;
    const double x = px(q);
    svg << "<line x1=\"" << detail::format_coord(x) << "\" y1=\""
        << detail::format_coord(mt + ph) << "\" x2=\"" << detail::format_coord(x)
        << "\" y2=\"" << detail::format_coord(mt + ph + 5)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    char qbuf[16];
    std::snprintf(qbuf, sizeof qbuf, "%.2f", q);
    svg << "<text x=\"" << detail::format_coord(x) << "\" y=\""
        << detail::format_coord(mt + ph + 20)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << qbuf
        << "</text>\n";
  }
  svg << "<text x=\"" << detail::format_coord(ml + pw / 2) << "\" y=\""
      << detail::format_coord(height - 12)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">channel "
         "strength q</text>\n";

  for (int e = static_cast<int>(std::ceil(y_lo)); e <= static_cast<int>(std::floor(y_hi));
       ++e) {
    const double y = mt + ph * (y_hi - e) / (y_hi - y_lo);
    svg << "<line x1=\"" << detail::format_coord(ml - 5) << "\" y1=\""
        << detail::format_coord(y) << "\" x2=\"" << detail::format_coord(ml) << "\" y2=\""
        << detail::format_coord(y) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << detail::format_coord(ml - 9) << "\" y=\""
        << detail::format_coord(y + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">1e" << e
        << "</text>\n";
  }
  svg << "<text x=\"18\" y=\"" << detail::format_coord(mt + ph / 2)
      << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 18 "
      << detail::format_coord(mt + ph / 2) << ")\">capacity (bits)</text>\n";

  // visibility band first so the curves draw on top of it
  if (table.has_band) {
    svg << "<polygon fill=\"#ff7f0e\" fill-opacity=\"0.35\" stroke=\"none\" points=\"";
    for (const SweepRow& r : table.rows)
      svg << detail::format_coord(px(r.q)) << ',' << detail::format_coord(py(*r.chi_vis_high))
          << ' ';
    for (auto it = table.rows.rbegin(); it != table.rows.rend(); ++it)
      svg << detail::format_coord(px(it->q)) << ','
          << detail::format_coord(py(*it->chi_vis_low)) << ' ';
    svg << "\"/>\n";
  }

  const auto polyline = [&](const char* color, auto&& value) {
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const SweepRow& r : table.rows)
      svg << detail::format_coord(px(r.q)) << ',' << detail::format_coord(py(value(r)))
          << ' ';
    svg << "\"/>\n";
  };
  polyline("#000000", [](const SweepRow& r) { return r.chi_switch; });
  polyline("#1f77b4", [](const SweepRow& r) { return r.chi_classical; });

  if (table.has_exp)
    for (const SweepRow& r : table.rows)
      svg << "<circle cx=\"" << detail::format_coord(px(r.q)) << "\" cy=\""
          << detail::format_coord(py(*r.chi_exp)) << "\" r=\"3\" fill=\"#d62728\"/>\n";

  // legend
  double ly = mt + 16;
  const auto legend = [&](const char* color, const char* label, bool box) {
    if (box)
      svg << "<rect x=\"" << detail::format_coord(ml + pw - 190) << "\" y=\""
          << detail::format_coord(ly - 8) << "\" width=\"22\" height=\"9\" fill=\"" << color
          << "\" fill-opacity=\"0.35\"/>\n";
    else
      svg << "<line x1=\"" << detail::format_coord(ml + pw - 190) << "\" y1=\""
          << detail::format_coord(ly - 4) << "\" x2=\""
          << detail::format_coord(ml + pw - 168) << "\" y2=\""
          << detail::format_coord(ly - 4) << "\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << detail::format_coord(ml + pw - 160) << "\" y=\""
        << detail::format_coord(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << label << "</text>\n";
    ly += 18;
  };
  legend("#000000", "superposed order", false);
  legend("#1f77b4", "definite order", false);
  if (table.has_band) legend("#ff7f0e", "visibility band", true);
  if (table.has_exp) legend("#d62728", "measured", false);

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cswitch
