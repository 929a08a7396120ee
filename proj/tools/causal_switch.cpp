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

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cswitch/plot.hpp"
#include "cswitch/sweep.hpp"
#include "cswitch/validate.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_data = 1;
constexpr int exit_usage = 2;

int run_sweep_cmd(double q_min, double q_max, int steps, double gamma,
                  const std::optional<double>& vis, const std::optional<double>& vis_err,
                  const std::string& meas_path, const std::string& out_path) {
  cswitch::SweepConfig cfg;
  cfg.q_min = q_min;
  cfg.q_max = q_max;
  cfg.steps = steps;
  cfg.gamma = gamma;
  if (vis) cfg.visibility = cswitch::VisibilityModel(*vis, *vis_err);
  if (!meas_path.empty()) cfg.measurements = cswitch::load_measurements_file(meas_path);

  const cswitch::SweepTable table = cswitch::run_sweep(cfg);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write \"" << out_path << "\"\n";
    return exit_data;
  }
  cswitch::write_sweep_csv(table, out);
  out.flush();
  if (!out) {
    std::cerr << "error: failed while writing \"" << out_path << "\"\n";
    return exit_data;
  }
  std::cout << "wrote " << table.rows.size() << " rows to " << out_path << "\n";
  return exit_ok;
}

int run_reconstruct_cmd(const std::string& meas_path, double q, double gamma,
                        const std::string& format) {
  const cswitch::MeasurementSet meas = cswitch::load_measurements_file(meas_path);
  const cswitch::CapacityResult r = cswitch::reconstruct_capacity(meas, q, gamma);
  using cswitch::detail::format_sci;
  if (format == "csv") {
    std::cout << "q,gamma,h_control,h_min,chi\n";
    std::cout << format_sci(r.q) << ',' << format_sci(r.gamma) << ','
              << format_sci(r.h_control) << ',' << format_sci(r.h_min) << ','
              << format_sci(r.chi) << "\n";
  } else {
    std::cout << "q         = " << format_sci(r.q) << "\n";
    std::cout << "gamma     = " << format_sci(r.gamma) << "\n";
    std::cout << "h_control = " << format_sci(r.h_control) << "\n";
    std::cout << "h_min     = " << format_sci(r.h_min) << "\n";
    std::cout << "chi       = " << format_sci(r.chi) << "\n";
  }
  return exit_ok;
}

int run_validate_cmd(const std::string& suite) {
  std::vector<cswitch::Check> checks;
  if (suite == "cptp")
    checks = cswitch::validate_cptp_suite();
  else if (suite == "switch")
    checks = cswitch::validate_switch_suite();
  else if (suite == "capacity")
    checks = cswitch::validate_capacity_suite();
  else if (suite == "hardware")
    checks = cswitch::validate_hardware_suite();
  else
    checks = cswitch::validate_all();

  bool all_pass = true;
  for (const cswitch::Check& c : checks) {
    all_pass = all_pass && c.pass;
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  deviation="
              << cswitch::detail::format_sci(c.deviation)
              << " tolerance=" << cswitch::detail::format_sci(c.tolerance) << "\n";
  }
  std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << " ("
            << checks.size() << " total)\n";
  return all_pass ? exit_ok : exit_data;
}

int run_plot_cmd(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "error: cannot open \"" << in_path << "\"\n";
    return exit_data;
  }
  const cswitch::SweepTable table = cswitch::parse_sweep_csv(in);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write \"" << out_path << "\"\n";
    return exit_data;
  }
  out << cswitch::render_sweep_svg(table);
  out.flush();
  if (!out) {
    std::cerr << "error: failed while writing \"" << out_path << "\"\n";
    return exit_data;
  }
  std::cout << "wrote plot to " << out_path << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capacity curves for two depolarizing channels in a superposed order"};
  app.require_subcommand(1);

  double q_min = 0.0, q_max = 1.0, gamma = 0.5, q = 0.0;
  int steps = 101;
  std::optional<double> vis, vis_err;
  std::string meas_path, out_path, in_path, format = "text", suite = "all";

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate capacity curves on a q grid");
  sweep->add_option("--q-min", q_min, "grid start")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--q-max", q_max, "grid end")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--steps", steps, "grid size")->check(CLI::Range(2, 1000000));
  sweep->add_option("--gamma", gamma, "control weight")->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--visibility", vis, "interference visibility")
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--visibility-err", vis_err, "visibility uncertainty")
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--measurements", meas_path, "measured coherence table (CSV)");
  sweep->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* rec = app.add_subcommand("reconstruct", "capacity from a measured table");
  rec->add_option("--measurements", meas_path, "measured coherence table (CSV)")
      ->required();
  rec->add_option("--q", q, "depolarizing strength")->required()->check(CLI::Range(0.0, 1.0));
  rec->add_option("--gamma", gamma, "control weight")->check(CLI::Range(0.0, 1.0));
  rec->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv"}));

  CLI::App* val = app.add_subcommand("validate", "run self checks");
  val->add_option("suite", suite, "cptp, switch, capacity, hardware or all")
      ->check(CLI::IsMember({"all", "cptp", "switch", "capacity", "hardware"}));

  CLI::App* plot = app.add_subcommand("plot", "render a sweep CSV as SVG");
  plot->add_option("--in", in_path, "sweep CSV path")->required();
  plot->add_option("--out", out_path, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (sweep->parsed()) {
      if (vis.has_value() != vis_err.has_value()) {
        std::cerr << "error: --visibility and --visibility-err go together\n";
        return exit_usage;
      }
      if (!(q_min < q_max)) {
        std::cerr << "error: --q-min must be below --q-max\n";
        return exit_usage;
      }
      return run_sweep_cmd(q_min, q_max, steps, gamma, vis, vis_err, meas_path, out_path);
    }
    if (rec->parsed()) return run_reconstruct_cmd(meas_path, q, gamma, format);
    if (val->parsed()) return run_validate_cmd(suite);
    if (plot->parsed()) return run_plot_cmd(in_path, out_path);
  } catch (const cswitch::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const cswitch::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  }
  return exit_usage;
}
