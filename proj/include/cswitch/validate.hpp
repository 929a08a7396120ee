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

#include "cswitch/experiment.hpp"

namespace cswitch {

// One line of `validate` output: a named deviation against its tolerance.
struct Check {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

namespace detail {

inline Check make_check(std::string name, double deviation, double tolerance) {
  Check c;
  c.name = std::move(name);
  c.deviation = deviation;
  c.tolerance = tolerance;
  c.pass = deviation <= tolerance;
  return c;
}

// Bloch vector uniform in the unit ball; all suites draw their states from
// fixed seeds so repeated runs print identical numbers.
inline DensityMatrix random_density(std::mt19937_64& rng) {
  double x = standard_normal(rng), y = standard_normal(rng), z = standard_normal(rng);
  const double n = std::sqrt(x * x + y * y + z * z);
  const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
  const double r = std::cbrt(u) / std::max(n, 1e-300);
  return density_from_stokes({x * r, y * r, z * r});
}

inline DensityMatrix random_pure(std::mt19937_64& rng) {
  const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
  const double v = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
  return pure_state(std::acos(1.0 - 2.0 * u), 2.0 * std::numbers::pi * v);
}

inline ComplexMatrix random_unitary(std::mt19937_64& rng) {
  const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
  const double t = std::asin(std::sqrt(u));
  const auto angle = [&] {
    return 2.0 * std::numbers::pi * (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
  };
  const double a = angle(), b = angle(), d = angle();
  ComplexMatrix m(2);
  m(0, 0) = std::polar(std::cos(t), a + d);
  m(0, 1) = std::polar(std::sin(t), b + d);
  m(1, 0) = -std::polar(std::sin(t), -b + d);
  m(1, 1) = std::polar(std::cos(t), -a + d);
  return m;
}

inline double uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

}  // namespace detail

// Kraus completeness of the named channel families, trace preservation on
// random states, and the definite-order coherence shrink.
inline std::vector<Check> validate_cptp_suite() {
  std::vector<Check> checks;
  const std::array<double, 5> grid = {0.0, 0.25, 0.5, 0.75, 1.0};

  for (double q : grid)
    checks.push_back(detail::make_check("cptp depolarizing q=" + std::to_string(q),
                                        validate_cptp(depolarizing_kraus(q)).deviation,
                                        1e-10));
  for (double g : grid)
    checks.push_back(detail::make_check("cptp amplitude damping g=" + std::to_string(g),
                                        validate_cptp(amplitude_damping_kraus(g)).deviation,
                                        1e-10));
  for (double f : grid)
    checks.push_back(detail::make_check("cptp phase damping f=" + std::to_string(f),
                                        validate_cptp(phase_damping_kraus(f)).deviation,
                                        1e-10));

  {
    KrausChannel bogus;
    bogus.label = "identity twice";
    bogus.operators = {ComplexMatrix::identity(2), ComplexMatrix::identity(2)};
    const CptpReport rep = validate_cptp(bogus);
    checks.push_back(detail::make_check("rejects {I, I} Kraus set",
                                        std::abs(rep.deviation - 1.0) +
                                            (rep.pass ? 1.0 : 0.0),
                                        1e-12));
  }

  std::mt19937_64 rng(11);
  double trace_dev = 0.0;
  for (int k = 0; k < 20; ++k) {
    const DensityMatrix rho = detail::random_density(rng);
    const double q = detail::uniform(rng);
    for (const KrausChannel& ch :
         {depolarizing_kraus(q), amplitude_damping_kraus(q), phase_damping_kraus(q)})
      trace_dev = std::max(trace_dev,
                           std::abs(apply_channel(ch, rho).matrix().trace().real() - 1.0));
  }
  checks.push_back(detail::make_check("trace preservation on random states", trace_dev,
                                      1e-12));

  double cov_dev = 0.0;
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix rho = detail::random_density(rng);
    const ComplexMatrix u = detail::random_unitary(rng);
    const double q = detail::uniform(rng);
    const KrausChannel ch = depolarizing_kraus(q);
    const ComplexMatrix lhs =
        apply_channel(ch, DensityMatrix(u * rho.matrix() * u.adjoint())).matrix();
    const ComplexMatrix rhs = u * apply_channel(ch, rho).matrix() * u.adjoint();
    cov_dev = std::max(cov_dev, lhs.max_abs_diff(rhs));
  }
  checks.push_back(detail::make_check("depolarizing unitary covariance", cov_dev, 1e-10));

  double shrink_dev = 0.0;
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix rho = detail::random_density(rng);
    const double q = detail::uniform(rng);
    const KrausChannel twice = compose_definite(depolarizing_kraus(q), depolarizing_kraus(q));
    const StokesVector in = stokes_from_density(rho);
    const StokesVector out = stokes_from_density(apply_channel(twice, rho));
    const double r = (1.0 - q) * (1.0 - q);
    shrink_dev = std::max({shrink_dev, std::abs(out.s1 - r * in.s1),
                           std::abs(out.s2 - r * in.s2), std::abs(out.s3 - r * in.s3)});
  }
  checks.push_back(detail::make_check("definite order shrinks Bloch by (1-q)^2",
                                      shrink_dev, 1e-12));
  return checks;
}

// The sixteen control coherence signs, the equivalence of the two switched
// depolarizing evaluations, the coherence scaling law and the damping
// conditionals.
inline std::vector<Check> validate_switch_suite() {
  std::vector<Check> checks;
  std::mt19937_64 rng(23);

  const DensityMatrix probe = detail::random_density(rng);
  const S2Matrix signs = theoretical_s2_signs();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double s2 =
          control_s2(pauli_pair_switch(i, j, SwitchInput(0.5, probe)));
      checks.push_back(detail::make_check(
          "coherence sign pair (" + std::to_string(i) + ", " + std::to_string(j) + ")",
          std::abs(s2 - signs[static_cast<size_t>(i)][static_cast<size_t>(j)]), 1e-12));
    }

  double mix_dev = 0.0;
  for (int k = 0; k < 25; ++k) {
    const double q = detail::uniform(rng);
    const double gamma = detail::uniform(rng);
    const SwitchInput in(gamma, detail::random_pure(rng));
    const DensityMatrix fast = depolarizing_switch_mixture(q, in);
    const KrausChannel dep = depolarizing_kraus(q);
    const DensityMatrix slow = apply_switch(dep, dep, in);
    mix_dev = std::max(mix_dev, fast.matrix().max_abs_diff(slow.matrix()));
  }
  checks.push_back(detail::make_check("pair mixture matches Kraus evaluation", mix_dev,
                                      1e-12));

  double law_dev = 0.0, keep_dev = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double q = detail::uniform(rng);
    const double gamma = detail::uniform(rng);
    const SwitchInput in(gamma, detail::random_density(rng));
    const StokesVector out =
        control_marginal_stokes(depolarizing_switch_mixture(q, in));
    const double coh_in = 2.0 * std::sqrt(gamma * (1.0 - gamma));
    law_dev = std::max(law_dev, std::abs(out.s2 - coh_in * (1.0 - 0.75 * q * q)));
    keep_dev = std::max({keep_dev, std::abs(out.s1 - (2.0 * gamma - 1.0)),
                         std::abs(out.s3)});
  }
  checks.push_back(detail::make_check("control coherence scales by 1 - 3q^2/4", law_dev,
                                      1e-12));
  checks.push_back(detail::make_check("control populations and s3 survive", keep_dev,
                                      1e-12));

  double spread = 0.0;
  {
    const double q = 0.6;
    const StokesVector ref = control_marginal_stokes(
        depolarizing_switch_mixture(q, SwitchInput(0.5, detail::random_density(rng))));
    for (int k = 0; k < 10; ++k) {
      const StokesVector s = control_marginal_stokes(
          depolarizing_switch_mixture(q, SwitchInput(0.5, detail::random_density(rng))));
      spread = std::max({spread, std::abs(s.s1 - ref.s1), std::abs(s.s2 - ref.s2),
                         std::abs(s.s3 - ref.s3)});
    }
  }
  checks.push_back(detail::make_check("control marginal ignores the target", spread,
                                      1e-12));

  double amp_dev = 0.0;
  {
    const KrausChannel amp = amplitude_damping_kraus(1.0);
    ComplexMatrix ground(2);
    ground(0, 0) = 1.0;
    for (int k = 0; k < 20; ++k) {
      const double gamma = detail::uniform(rng);
      const double theta = std::numbers::pi * detail::uniform(rng);
      const double phi = 2.0 * std::numbers::pi * detail::uniform(rng);
      const DensityMatrix joint =
          apply_switch(amp, amp, SwitchInput(gamma, detail::random_density(rng)));
      const ComplexMatrix cond = project_control(joint, theta, phi);
      const double w = cond.trace().real();
      if (w > 1e-6)
        amp_dev = std::max(amp_dev,
                           normalize_conditional(cond).matrix().max_abs_diff(ground));
    }
  }
  checks.push_back(detail::make_check("full amplitude damping conditions to ground",
                                      amp_dev, 1e-10));

  double phase_dev = 0.0;
  {
    const KrausChannel ph = phase_damping_kraus(1.0);
    for (int k = 0; k < 20; ++k) {
      const double gamma = detail::uniform(rng);
      const double theta = std::numbers::pi * detail::uniform(rng);
      const double phi = 2.0 * std::numbers::pi * detail::uniform(rng);
      const DensityMatrix joint =
          apply_switch(ph, ph, SwitchInput(gamma, detail::random_density(rng)));
      const ComplexMatrix cond = project_control(joint, theta, phi);
      phase_dev = std::max(phase_dev, std::abs(cond(0, 1)));
    }
  }
  checks.push_back(detail::make_check("full phase damping kills conditional coherence",
                                      phase_dev, 1e-12));
  return checks;
}

// Endpoint values, monotonicity, the chi decomposition identity, the
// entropy search against blind sampling and the branch reconstruction
// against the direct evaluation.
inline std::vector<Check> validate_capacity_suite() {
  std::vector<Check> checks;
  std::mt19937_64 rng(37);

  checks.push_back(detail::make_check("lossless switch keeps one bit",
                                      std::abs(holevo_switch(0.0).chi - 1.0), 1e-9));
  checks.push_back(detail::make_check("lossless definite order keeps one bit",
                                      std::abs(holevo_classical(0.0) - 1.0), 1e-12));
  checks.push_back(detail::make_check("full depolarizing kills definite order",
                                      std::abs(holevo_classical(1.0)), 1e-12));

  {
    double ident_dev = 0.0;
    for (double q : {0.3, 0.9}) {
      const CapacityResult r = holevo_switch(q);
      ident_dev = std::max(ident_dev, std::abs(r.chi - (1.0 + r.h_control - r.h_min)));
    }
    checks.push_back(detail::make_check("chi equals 1 + h_control - h_min", ident_dev,
                                        1e-14));
  }

  {
    double worst = 0.0;
    double prev = holevo_classical(0.0);
    for (int k = 1; k <= 100; ++k) {
      const double cur = holevo_classical(k / 100.0);
      worst = std::max(worst, cur - prev);
      prev = cur;
    }
    checks.push_back(detail::make_check("definite order capacity decreases in q", worst,
                                        0.0));
  }

  {
    double min_chi = 1e300;
    for (int k = 0; k <= 20; ++k)
      min_chi = std::min(min_chi, holevo_switch(k / 20.0).chi);
    checks.push_back(detail::make_check("switched capacity stays positive", -min_chi,
                                        0.0));
  }

  {
    double opt_dev = 0.0, end_dev = 0.0;
    for (double q : {0.3, 0.8}) {
      const double at_half = holevo_switch(q, 0.5).chi;
      for (double gamma : {0.0, 0.25, 0.75, 1.0})
        opt_dev = std::max(opt_dev, holevo_switch(q, gamma).chi - at_half);
      end_dev = std::max({end_dev, std::abs(holevo_switch(q, 0.0).chi - holevo_classical(q)),
                          std::abs(holevo_switch(q, 1.0).chi - holevo_classical(q))});
    }
    checks.push_back(detail::make_check("even control weight is optimal", opt_dev, 1e-12));
    checks.push_back(detail::make_check("degenerate weights match definite order",
                                        end_dev, 1e-8));
  }

  {
    const double q = 0.6;
    const CapacityResult r = holevo_switch(q);
    double sampled = 1e300;
    for (int k = 0; k < 2000; ++k) {
      const double t = std::acos(1.0 - 2.0 * detail::uniform(rng));
      const double p = 2.0 * std::numbers::pi * detail::uniform(rng);
      sampled = std::min(sampled, von_neumann_entropy(depolarizing_switch_mixture(
                                      q, SwitchInput(0.5, pure_state(t, p)))));
    }
    checks.push_back(detail::make_check("entropy search beats blind sampling",
                                        std::max(0.0, r.h_min - sampled), 1e-6));
  }

  {
    const S2Matrix signs = theoretical_s2_signs();
    double dev = 0.0;
    for (double q : {0.5, 1.0})
      dev = std::max(dev,
                     std::abs(holevo_from_branches(signs, q).chi - holevo_switch(q).chi));
    checks.push_back(detail::make_check("ideal branch table reproduces direct capacity",
                                        dev, 1e-10));
  }
  return checks;
}

// Prism settings against their Paulis, plus one deliberate perturbation to
// prove the distance is sensitive at the half-degree scale.
inline std::vector<Check> validate_hardware_suite() {
  std::vector<Check> checks;
  for (const HardwareCheck& hc : verify_hardware_settings())
    checks.push_back(detail::make_check("prism settings for " + hc.name, hc.distance,
                                        1e-12));

  constexpr double half_degree = std::numbers::pi / 360.0;
  const double dist = detail::distance_up_to_phase(
      prism_unitary(0.0, {std::numbers::pi / 4 + half_degree}), pauli(1));
  checks.push_back(detail::make_check("half degree prism error is visible",
                                      std::max(0.0, 0.01 - dist), 0.0));
  return checks;
}

inline std::vector<Check> validate_all() {
  std::vector<Check> all = validate_cptp_suite();
  for (auto&& suite : {validate_switch_suite(), validate_capacity_suite(),
                       validate_hardware_suite()})
    all.insert(all.end(), suite.begin(), suite.end());
  return all;
}

}  // namespace cswitch
