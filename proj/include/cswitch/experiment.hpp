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

#include <charconv>
#include <fstream>
#include <istream>
#include <random>

#include "cswitch/capacity.hpp"

namespace cswitch {

// One measured control coherence: the X expectation of the control after
// the switched Pauli pair (i, j), with its one-sigma uncertainty.
struct MeasurementRecord {
  int i = 0;
  int j = 0;
  double s2 = 0.0;
  double sigma = 0.0;
};

class MeasurementSet {
 public:
  MeasurementSet(std::array<MeasurementRecord, 16> records, std::string metadata)
      : records_(records), metadata_(std::move(metadata)) {}

  const MeasurementRecord& at(int i, int j) const {
    if (i < 0 || i > 3 || j < 0 || j > 3)
      throw std::out_of_range("measurement pair index must be in 0..3");
    return records_[static_cast<size_t>(i) * 4 + j];
  }

  const std::array<MeasurementRecord, 16>& records() const { return records_; }
  const std::string& metadata() const { return metadata_; }

  S2Matrix s2_matrix() const {
    S2Matrix m{};
    for (const MeasurementRecord& r : records_)
      m[static_cast<size_t>(r.i)][static_cast<size_t>(r.j)] = r.s2;
    return m;
  }

 private:
  std::array<MeasurementRecord, 16> records_;
  std::string metadata_;
};

namespace detail {

inline std::string trim(std::string s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t b = 0;
  while (b < s.size() && is_space(static_cast<unsigned char>(s[b]))) ++b;
  return s.substr(b);
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(',', start);
    if (pos == std::string::npos) {
      out.push_back(trim(line.substr(start)));
      break;
    }
    out.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

inline int parse_index(const std::string& field, int row, const char* name) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError("row " + std::to_string(row) + ": " + name + " \"" + field +
                     "\" is not an integer");
  return v;
}

inline double parse_real(const std::string& field, int row, const char* name) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError("row " + std::to_string(row) + ": " + name + " \"" + field +
                     "\" is not a number");
  return v;
}

}  // namespace detail

// Parse a measurement table. The format is a CSV with header "i,j,s2,sigma"
// followed by one row per Pauli pair; all sixteen pairs must appear exactly
// once. Errors carry 1-based row numbers.
inline MeasurementSet load_measurements(std::istream& in,
                                        const std::string& source = "stream") {
  std::string line;
  int row = 0;

  if (!std::getline(in, line)) throw ParseError(source + ": empty input");
  ++row;
  {
    const auto fields = detail::split_csv(line);
    if (fields != std::vector<std::string>{"i", "j", "s2", "sigma"})
      throw ParseError("row 1: header must be \"i,j,s2,sigma\", got \"" +
                       detail::trim(line) + "\"");
  }

  std::array<MeasurementRecord, 16> records{};
  std::array<bool, 16> seen{};
  while (std::getline(in, line)) {
    ++row;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv(line);
    if (fields.size() != 4)
      throw ParseError("row " + std::to_string(row) + ": expected 4 fields, got " +
                       std::to_string(fields.size()));
    MeasurementRecord r;
    r.i = detail::parse_index(fields[0], row, "i");
    r.j = detail::parse_index(fields[1], row, "j");
    r.s2 = detail::parse_real(fields[2], row, "s2");
    r.sigma = detail::parse_real(fields[3], row, "sigma");
    if (r.i < 0 || r.i > 3 || r.j < 0 || r.j > 3)
      throw ParseError("row " + std::to_string(row) + ": pair (" + std::to_string(r.i) +
                       ", " + std::to_string(r.j) + ") out of range");
    if (std::abs(r.s2) > 1.0)
      throw ParseError("row " + std::to_string(row) + ": s2 " + std::to_string(r.s2) +
                       " outside [-1, 1]");
    if (r.sigma < 0.0)
      throw ParseError("row " + std::to_string(row) + ": sigma " +
                       std::to_string(r.sigma) + " is negative");
    const size_t idx = static_cast<size_t>(r.i) * 4 + static_cast<size_t>(r.j);
    if (seen[idx])
      throw ParseError("row " + std::to_string(row) + ": duplicate pair (" +
                       std::to_string(r.i) + ", " + std::to_string(r.j) + ")");
    seen[idx] = true;
    records[idx] = r;
  }

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!seen[static_cast<size_t>(i) * 4 + j])
        throw ParseError(source + ": missing pair (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
  return MeasurementSet(records, source);
}

inline MeasurementSet load_measurements_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open measurement file \"" + path + "\"");
  return load_measurements(in, path);
}

// Capacity from a measured table at depolarizing strength q.
inline CapacityResult reconstruct_capacity(const MeasurementSet& meas, double q,
                                           double gamma = 0.5) {
  return holevo_from_branches(meas.s2_matrix(), q, gamma);
}

// Ideal control coherence signs: +1 when the pair commutes, -1 when it
// anticommutes. Derived from the Pauli products themselves.
inline S2Matrix theoretical_s2_signs() {
  S2Matrix signs{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      signs[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          pauli_product(i, j).max_abs_diff(pauli_product(j, i)) < 1e-12 ? 1.0 : -1.0;
  return signs;
}

// Interference visibility with uncertainty; v +- v_err is clamped to [0, 1]
// where it matters.
struct VisibilityModel {
  double v;
  double v_err;

  VisibilityModel(double v_, double v_err_) : v(v_), v_err(v_err_) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("visibility must be in [0, 1], got " +
                                  std::to_string(v));
    if (v_err < 0.0)
      throw std::invalid_argument("visibility uncertainty must be nonnegative");
  }
};

// Capacity band induced by the visibility uncertainty: every ideal sign
// pattern is scaled to +-v before reconstruction, evaluated at both ends
// of v +- v_err. Returns (low, high).
inline std::pair<double, double> visibility_band(const VisibilityModel& vm, double q,
                                                 double gamma = 0.5) {
  const S2Matrix signs = theoretical_s2_signs();
  const auto chi_at = [&](double vis) {
    S2Matrix s{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            signs[static_cast<size_t>(i)][static_cast<size_t>(j)] * vis;
    return holevo_from_branches(s, q, gamma).chi;
  };
  const double lo = chi_at(std::clamp(vm.v - vm.v_err, 0.0, 1.0));
  const double hi = chi_at(std::clamp(vm.v + vm.v_err, 0.0, 1.0));
  return std::minmax(lo, hi);
}

// Unitary realized by a phase plus a train of half-wave prisms, each
// reflecting the qubit about an axis set by its angle. Prisms act in the
// listed order.
inline ComplexMatrix prism_unitary(double phi, const std::vector<double>& thetas) {
  if (thetas.empty()) throw std::invalid_argument("prism train needs at least one angle");
  if (thetas.size() > 2) throw std::invalid_argument("prism train has at most two angles");
  ComplexMatrix u = ComplexMatrix::identity(2);
  for (double theta : thetas) {
    ComplexMatrix r(2);
    r(0, 0) = -std::cos(2.0 * theta);
    r(0, 1) = std::sin(2.0 * theta);
    r(1, 0) = std::sin(2.0 * theta);
    r(1, 1) = std::cos(2.0 * theta);
    u = r * u;
  }
  return std::polar(1.0, phi) * u;
}

struct HardwareCheck {
  std::string name;
  double distance = 0.0;  // max-abs to the target, best global phase
  bool pass = false;
};

namespace detail {

inline double distance_up_to_phase(const ComplexMatrix& u, const ComplexMatrix& target) {
  int br = 0, bc = 0;
  double best = -1.0;
  for (int r = 0; r < target.dim(); ++r)
    for (int c = 0; c < target.dim(); ++c)
      if (std::abs(target(r, c)) > best) {
        best = std::abs(target(r, c));
        br = r;
        bc = c;
      }
  complexd phase(1.0, 0.0);
  if (std::abs(u(br, bc)) > 1e-15)
    phase = (target(br, bc) / std::abs(target(br, bc))) /
            (u(br, bc) / std::abs(u(br, bc)));
  return (phase * u).max_abs_diff(target);
}

}  // namespace detail

// Check the compiled-in prism settings against the four Paulis they are
// meant to realize, up to a global phase. The settings mirror the optical
// implementation: each Pauli is one or two half-wave prisms plus a phase.
inline std::vector<HardwareCheck> verify_hardware_settings() {
  constexpr double pi = std::numbers::pi;
  struct Setting {
    const char* name;
    int pauli_index;
    double phi;
    std::vector<double> thetas;
  };
  const std::vector<Setting> settings = {
      {"sigma0", 0, 0.0, {pi / 2, pi / 2}},
      {"sigma1", 1, 0.0, {pi / 4}},
      {"sigma2", 2, pi / 2, {pi / 2, pi / 4}},
      {"sigma3", 3, 0.0, {pi / 2}},
  };
  std::vector<HardwareCheck> out;
  out.reserve(settings.size());
  for (const Setting& s : settings) {
    HardwareCheck check;
    check.name = s.name;
    check.distance =
        detail::distance_up_to_phase(prism_unitary(s.phi, s.thetas), pauli(s.pauli_index));
    check.pass = check.distance <= 1e-12;
    out.push_back(check);
  }
  return out;
}

struct MonteCarloBand {
  double chi_mean = 0.0;
  double chi_std = 0.0;
};

namespace detail {

inline double standard_normal(std::mt19937_64& rng) {
  const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
  const double u2 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace detail

// Propagate the per-pair uncertainties through the reconstruction by
// resampling each coherence from its normal model, clamped to [-1, 1].
// The draw order (pairs in lexicographic order within each sample) and the
// generator are fixed, so a given seed always returns the same band.
inline MonteCarloBand monte_carlo_band(const MeasurementSet& meas, double q,
                                       double gamma, int n_samples, uint64_t seed) {
  if (n_samples < 100)
    throw std::invalid_argument("monte_carlo_band needs at least 100 samples, got " +
                                std::to_string(n_samples));
  std::mt19937_64 rng(seed);
  std::vector<double> chis;
  chis.reserve(static_cast<size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    S2Matrix s{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const MeasurementRecord& r = meas.at(i, j);
        const double draw = r.s2 + r.sigma * detail::standard_normal(rng);
        s[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::clamp(draw, -1.0, 1.0);
      }
    chis.push_back(holevo_from_branches(s, q, gamma).chi);
  }
  MonteCarloBand band;
  for (double c : chis) band.chi_mean += c;
  band.chi_mean /= static_cast<double>(n_samples);
  double ss = 0.0;
  for (double c : chis) ss += (c - band.chi_mean) * (c - band.chi_mean);
  band.chi_std = std::sqrt(ss / static_cast<double>(n_samples - 1));
  return band;
}

}  // namespace cswitch
