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

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cswitch/experiment.hpp"
#include "test_util.hpp"

using cswitch::MeasurementRecord;
using cswitch::MeasurementSet;
using cswitch::ParseError;
using cswitch::S2Matrix;
using testutil::Mat;

namespace {

MeasurementSet bundled_table() {
  return cswitch::load_measurements_file(
      testutil::env_or("TABLE1_CSV", "data/table1.csv"));
}

MeasurementSet set_from(const S2Matrix& s2, double sigma) {
  std::array<MeasurementRecord, 16> records{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      records[static_cast<size_t>(i * 4 + j)] = {
          i, j, s2[static_cast<size_t>(i)][static_cast<size_t>(j)], sigma};
  return MeasurementSet(records, "synthetic");
}

std::string valid_csv() {
  std::ostringstream out;
  out << "i,j,s2,sigma\n";
  const S2Matrix signs = cswitch::theoretical_s2_signs();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out << i << "," << j << ","
          << 0.9 * signs[static_cast<size_t>(i)][static_cast<size_t>(j)] << ",0.001\n";
  return out.str();
}

}  // namespace

TEST_CASE("load_measurements on the bundled table") {
  const MeasurementSet meas = bundled_table();

  // spot checks against the shipped file
  REQUIRE(meas.at(0, 0).s2 == Catch::Approx(0.8547).margin(1e-12));
  REQUIRE(meas.at(0, 0).sigma == Catch::Approx(0.0006).margin(1e-12));
  REQUIRE(meas.at(1, 2).s2 == Catch::Approx(-0.8434).margin(1e-12));
  REQUIRE(meas.at(2, 1).s2 == Catch::Approx(-0.8600).margin(1e-12));
  REQUIRE(meas.at(3, 3).s2 == Catch::Approx(0.8780).margin(1e-12));
  REQUIRE(meas.at(3, 3).sigma == Catch::Approx(0.0005).margin(1e-12));

  SECTION("every coherence is strong and carries a small uncertainty") {
    for (const MeasurementRecord& r : meas.records()) {
      REQUIRE(std::abs(r.s2) > 0.8);
      REQUIRE(std::abs(r.s2) < 0.9);
      REQUIRE(r.sigma > 0.0);
      REQUIRE(r.sigma < 1e-3);
    }
  }

  SECTION("measured signs follow the commutation pattern") {
    const S2Matrix signs = cswitch::theoretical_s2_signs();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        CAPTURE(i, j);
        REQUIRE(meas.at(i, j).s2 * signs[static_cast<size_t>(i)][static_cast<size_t>(j)] >
                0.0);
      }
  }

  SECTION("indexing is bounds checked") {
    REQUIRE_THROWS_AS(meas.at(4, 0), std::out_of_range);
    REQUIRE_THROWS_AS(meas.at(0, -1), std::out_of_range);
  }
}

TEST_CASE("load_measurements rejects malformed tables") {
  SECTION("a complete synthetic table parses") {
    std::istringstream in(valid_csv());
    REQUIRE_NOTHROW(cswitch::load_measurements(in));
  }

  SECTION("wrong header") {
    std::istringstream in("i,j,value,sigma\n0,0,1,0\n");
    REQUIRE_THROWS_WITH(cswitch::load_measurements(in),
                        Catch::Matchers::ContainsSubstring("row 1"));
  }

  SECTION("empty input") {
    std::istringstream in("");
    REQUIRE_THROWS_AS(cswitch::load_measurements(in), ParseError);
  }

  SECTION("missing pair is reported") {
    std::string csv = valid_csv();
    csv.erase(csv.rfind("3,3"));
    std::istringstream in(csv);
    REQUIRE_THROWS_WITH(cswitch::load_measurements(in),
                        Catch::Matchers::ContainsSubstring("(3, 3)"));
  }

  SECTION("duplicate pair carries its row number") {
    std::string csv = valid_csv();
    csv += "2,2,0.5,0.001\n";
    std::istringstream in(csv);
    REQUIRE_THROWS_WITH(cswitch::load_measurements(in),
                        Catch::Matchers::ContainsSubstring("row 18"));
  }

  SECTION("out-of-range fields") {
    std::istringstream big_s2("i,j,s2,sigma\n0,0,1.2,0.001\n");
    REQUIRE_THROWS_AS(cswitch::load_measurements(big_s2), ParseError);
    std::istringstream neg_sigma("i,j,s2,sigma\n0,0,0.5,-0.001\n");
    REQUIRE_THROWS_AS(cswitch::load_measurements(neg_sigma), ParseError);
    std::istringstream bad_index("i,j,s2,sigma\n5,0,0.5,0.001\n");
    REQUIRE_THROWS_AS(cswitch::load_measurements(bad_index), ParseError);
    std::istringstream junk("i,j,s2,sigma\n0,zero,0.5,0.001\n");
    REQUIRE_THROWS_WITH(cswitch::load_measurements(junk),
                        Catch::Matchers::ContainsSubstring("row 2"));
  }

  SECTION("missing file") {
    REQUIRE_THROWS_AS(cswitch::load_measurements_file("/nonexistent/table.csv"), ParseError);
  }
}

TEST_CASE("reconstruct_capacity from the bundled table") {
  const MeasurementSet meas = bundled_table();

  SECTION("full noise") {
    const double chi = cswitch::reconstruct_capacity(meas, 1.0).chi;
    REQUIRE(chi > 0.0326);
    REQUIRE(chi < 0.0356);
  }

  SECTION("near the capacity minimum") {
    const double chi = cswitch::reconstruct_capacity(meas, 0.78).chi;
    REQUIRE(chi > 0.0200);
    REQUIRE(chi < 0.0230);
  }

  SECTION("no noise collapses the reconstruction to a single branch") {
    REQUIRE(std::abs(cswitch::reconstruct_capacity(meas, 0.0).chi - 1.0) < 1e-9);
  }

  SECTION("ideal signs recover the analytic capacity") {
    const MeasurementSet ideal = set_from(cswitch::theoretical_s2_signs(), 0.0);
    REQUIRE(std::abs(cswitch::reconstruct_capacity(ideal, 1.0).chi - 0.0487949406954) <
            1e-9);
  }
}

TEST_CASE("visibility_band") {
  const cswitch::VisibilityModel vm(0.853, 0.018);
  const MeasurementSet meas = bundled_table();

  SECTION("brackets the measured reconstruction") {
    for (double q : {0.78, 1.0}) {
      const auto [lo, hi] = cswitch::visibility_band(vm, q);
      const double chi = cswitch::reconstruct_capacity(meas, q).chi;
      CAPTURE(q, lo, hi, chi);
      REQUIRE(lo < hi);
      REQUIRE(chi >= lo);
      REQUIRE(chi <= hi);
    }
  }

  SECTION("higher visibility means more capacity") {
    const auto low = cswitch::visibility_band({0.8, 0.0}, 1.0);
    const auto high = cswitch::visibility_band({0.9, 0.0}, 1.0);
    REQUIRE(low.first == low.second);
    REQUIRE(high.first > low.first);
  }

  SECTION("the upper edge clamps at ideal visibility") {
    const auto band = cswitch::visibility_band({0.99, 0.05}, 1.0);
    REQUIRE(std::abs(band.second - 0.0487949406954) < 1e-9);
  }

  SECTION("model validation") {
    REQUIRE_THROWS_AS(cswitch::VisibilityModel(1.2, 0.01), std::invalid_argument);
    REQUIRE_THROWS_AS(cswitch::VisibilityModel(0.8, -0.01), std::invalid_argument);
  }
}

TEST_CASE("prism_unitary") {
  constexpr double pi = std::numbers::pi;

  SECTION("frozen single-prism settings") {
    REQUIRE(testutil::max_abs_diff(cswitch::prism_unitary(0.0, {pi / 4}),
                                   testutil::sigma(1)) < 1e-15);
    REQUIRE(testutil::max_abs_diff(cswitch::prism_unitary(0.0, {pi / 2}),
                                   testutil::sigma(3)) < 1e-15);
  }

  SECTION("a prism train composes left to right") {
    // R(pi/2) then R(pi/4) is X * Z; the quarter phase turns it into Y.
    const cswitch::ComplexMatrix u = cswitch::prism_unitary(pi / 2, {pi / 2, pi / 4});
    REQUIRE(testutil::max_abs_diff(u, testutil::sigma(2)) < 1e-15);
  }

  SECTION("every train is unitary") {
    std::mt19937_64 rng(131);
    for (int k = 0; k < 50; ++k) {
      const cswitch::ComplexMatrix u = cswitch::prism_unitary(
          2.0 * pi * testutil::uniform(rng),
          {pi * testutil::uniform(rng), pi * testutil::uniform(rng)});
      const Mat prod = testutil::mul(testutil::dagger(testutil::from_cswitch(u)),
                                     testutil::from_cswitch(u));
      REQUIRE(testutil::max_abs_diff(testutil::to_cswitch(prod),
                                     testutil::eye(2)) < 1e-14);
    }
  }

  SECTION("train length limits") {
    REQUIRE_THROWS_AS(cswitch::prism_unitary(0.0, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(cswitch::prism_unitary(0.0, {0.1, 0.2, 0.3}), std::invalid_argument);
  }
}

TEST_CASE("verify_hardware_settings") {
  const auto checks = cswitch::verify_hardware_settings();
  REQUIRE(checks.size() == 4);
  for (const cswitch::HardwareCheck& c : checks) {
    CAPTURE(c.name, c.distance);
    REQUIRE(c.pass);
    REQUIRE(c.distance <= 1e-12);
  }

  SECTION("the check is sensitive to misaligned prisms") {
    constexpr double pi = std::numbers::pi;
    const double skew = 0.5 * pi / 180.0;
    const double dist = cswitch::detail::distance_up_to_phase(
        cswitch::prism_unitary(0.0, {pi / 4 + skew}), cswitch::pauli(1));
    REQUIRE(dist > 0.01);
  }
}

TEST_CASE("monte_carlo_band") {
  SECTION("zero uncertainty collapses the band") {
    const MeasurementSet ideal = set_from(cswitch::theoretical_s2_signs(), 0.0);
    const auto band = cswitch::monte_carlo_band(ideal, 1.0, 0.5, 100, 7);
    REQUIRE(band.chi_std < 1e-12);
    REQUIRE(std::abs(band.chi_mean - 0.0487949406954) < 1e-9);
  }

  SECTION("seeded resampling is reproducible and tight") {
    const MeasurementSet meas = bundled_table();
    const auto a = cswitch::monte_carlo_band(meas, 1.0, 0.5, 100, 42);
    const auto b = cswitch::monte_carlo_band(meas, 1.0, 0.5, 100, 42);
    REQUIRE(a.chi_mean == b.chi_mean);
    REQUIRE(a.chi_std == b.chi_std);

    REQUIRE(a.chi_std > 0.0);
    REQUIRE(a.chi_std < 1.5e-3);
    REQUIRE(std::abs(a.chi_mean - cswitch::reconstruct_capacity(meas, 1.0).chi) < 3e-3);

    const auto c = cswitch::monte_carlo_band(meas, 1.0, 0.5, 100, 43);
    REQUIRE(c.chi_mean != a.chi_mean);
  }

  SECTION("needs enough samples for a stable spread") {
    const MeasurementSet ideal = set_from(cswitch::theoretical_s2_signs(), 0.0);
    REQUIRE_THROWS_AS(cswitch::monte_carlo_band(ideal, 1.0, 0.5, 99, 7),
                      std::invalid_argument);
  }
}
