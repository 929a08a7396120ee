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

#include <cstdio>
#include <optional>
#include <ostream>

#include "cswitch/experiment.hpp"

namespace cswitch {

struct SweepConfig {
  double q_min = 0.0;
  double q_max = 1.0;
  int steps = 101;
  double gamma = 0.5;
  std::optional<VisibilityModel> visibility;
  std::optional<MeasurementSet> measurements;
};

struct SweepRow {
  double q = 0.0;
  double chi_switch = 0.0;
  double chi_classical = 0.0;
  std::optional<double> chi_vis_low;
  std::optional<double> chi_vis_high;
  std::optional<double> chi_exp;
};

// A sweep result plus which optional columns it carries; the CSV reader
// and the plot renderer exchange this.
struct SweepTable {
  bool has_band = false;
  bool has_exp = false;
  std::vector<SweepRow> rows;
};

// Evaluate the capacity curves on an even q grid, low to high. Optional
// inputs add the visibility band and the measured reconstruction per row.
inline SweepTable run_sweep(const SweepConfig& cfg) {
  if (cfg.steps < 2)
    throw std::invalid_argument("sweep needs at least 2 steps, got " +
                                std::to_string(cfg.steps));
  detail::require_unit_interval(cfg.q_min, "q_min");
  detail::require_unit_interval(cfg.q_max, "q_max");
  detail::require_unit_interval(cfg.gamma, "control weight");
  if (!(cfg.q_min < cfg.q_max))
    throw std::invalid_argument("sweep needs q_min < q_max");

  SweepTable table;
  table.has_band = cfg.visibility.has_value();
  table.has_exp = cfg.measurements.has_value();
  table.rows.reserve(static_cast<size_t>(cfg.steps));
  for (int k = 0; k < cfg.steps; ++k) {
    SweepRow row;
    row.q = cfg.q_min + (cfg.q_max - cfg.q_min) * k / (cfg.steps - 1);
    row.chi_switch = holevo_switch(row.q, cfg.gamma).chi;
    row.chi_classical = holevo_classical(row.q);
    if (cfg.visibility) {
      const auto band = visibility_band(*cfg.visibility, row.q, cfg.gamma);
      row.chi_vis_low = band.first;
      row.chi_vis_high = band.second;
    }
    if (cfg.measurements)
      row.chi_exp = reconstruct_capacity(*cfg.measurements, row.q, cfg.gamma).chi;
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace detail {

// 12 significant digits, enough to round-trip the plotted curves exactly.
inline std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

}  // namespace detail

inline void write_sweep_csv(const SweepTable& table, std::ostream& out) {
  out << "q,chi_switch,chi_classical";
  if (table.has_band) out << ",chi_vis_low,chi_vis_high";
  if (table.has_exp) out << ",chi_exp";
  out << "\n";
  for (const SweepRow& r : table.rows) {
    if (r.chi_vis_low.has_value() != table.has_band ||
        r.chi_vis_high.has_value() != table.has_band ||
        r.chi_exp.has_value() != table.has_exp)
      throw std::invalid_argument("sweep rows disagree about optional columns");
    out << detail::format_sci(r.q) << ',' << detail::format_sci(r.chi_switch) << ','
        << detail::format_sci(r.chi_classical);
    if (table.has_band)
      out << ',' << detail::format_sci(*r.chi_vis_low) << ','
          << detail::format_sci(*r.chi_vis_high);
    if (table.has_exp) out << ',' << detail::format_sci(*r.chi_exp);
    out << "\n";
  }
}

// Read back a sweep CSV. Accepts exactly the column sets write_sweep_csv
// produces and requires at least one row with strictly increasing q.
inline SweepTable parse_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("sweep CSV is empty");
  int row = 1;

  const auto header = detail::split_csv(line);
  const std::vector<std::string> base = {"q", "chi_switch", "chi_classical"};
  const std::vector<std::string> band = {"chi_vis_low", "chi_vis_high"};
  SweepTable table;
  {
    std::vector<std::string> expect = base;
    if (header.size() == 5 || header.size() == 6) {
      expect.insert(expect.end(), band.begin(), band.end());
      table.has_band = true;
    }
    if (header.size() == 4 || header.size() == 6) {
      expect.emplace_back("chi_exp");
      table.has_exp = true;
    }
    if (header != expect)
      throw ParseError("row 1: unrecognized sweep CSV header \"" + detail::trim(line) +
                       "\"");
  }
  const size_t n_cols = header.size();

  while (std::getline(in, line)) {
    ++row;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv(line);
    if (fields.size() != n_cols)
      throw ParseError("row " + std::to_string(row) + ": expected " +
                       std::to_string(n_cols) + " fields, got " +
                       std::to_string(fields.size()));
    SweepRow r;
    size_t f = 0;
    r.q = detail::parse_real(fields[f++], row, "q");
    r.chi_switch = detail::parse_real(fields[f++], row, "chi_switch");
    r.chi_classical = detail::parse_real(fields[f++], row, "chi_classical");
    if (table.has_band) {
      r.chi_vis_low = detail::parse_real(fields[f++], row, "chi_vis_low");
      r.chi_vis_high = detail::parse_real(fields[f++], row, "chi_vis_high");
    }
    if (table.has_exp) r.chi_exp = detail::parse_real(fields[f++], row, "chi_exp");
    if (!table.rows.empty() && r.q <= table.rows.back().q)
      throw ParseError("row " + std::to_string(row) + ": q values must increase");
    table.rows.push_back(r);
  }
  if (table.rows.empty()) throw ParseError("sweep CSV has no data rows");
  return table;
}

}  // namespace cswitch
