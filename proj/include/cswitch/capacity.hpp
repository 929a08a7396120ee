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

#include <limits>
#include <numbers>

#include "cswitch/switch.hpp"

namespace cswitch {

struct MinEntropyResult {
  double h_min = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

// Minimum output entropy over pure target states. Concavity of the output
// entropy in the input state means pure targets suffice. The sphere is
// scanned on a 64 x 128 grid (theta inclusive of both poles, phi periodic)
// and the best cell is polished by a shrinking compass search; steps halve
// on failure down to 1e-10 rad, far past the 1e-8 entropy tolerance the
// callers rely on.
//
// Builder maps sphere angles to the joint output state whose entropy is
// minimized: (double theta, double phi) -> DensityMatrix.
template <typename Builder>
MinEntropyResult min_output_entropy(Builder&& build) {
  constexpr int n_theta = 64;
  constexpr int n_phi = 128;
  constexpr double pi = std::numbers::pi;

  const auto eval = [&](double t, double p) { return von_neumann_entropy(build(t, p)); };

  MinEntropyResult best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (int k = 0; k < n_theta; ++k) {
    const double t = pi * k / (n_theta - 1);
    for (int m = 0; m < n_phi; ++m) {
      const double p = 2.0 * pi * m / n_phi;
      const double h = eval(t, p);
      if (h < best.h_min) best = {h, t, p};
    }
  }

  const auto wrap_phi = [](double p) {
    p = std::fmod(p, 2.0 * pi);
    return p < 0.0 ? p + 2.0 * pi : p;
  };

  double step_t = pi / (n_theta - 1);
  double step_p = 2.0 * pi / n_phi;
  int evals = 0;
  while ((step_t > 1e-10 || step_p > 1e-10) && evals < 20000) {
    MinEntropyResult cand = best;
    const std::array<std::pair<double, double>, 4> moves = {
        {{std::clamp(best.theta + step_t, 0.0, pi), best.phi},
         {std::clamp(best.theta - step_t, 0.0, pi), best.phi},
         {best.theta, wrap_phi(best.phi + step_p)},
         {best.theta, wrap_phi(best.phi - step_p)}}};
    for (const auto& [t, p] : moves) {
      const double h = eval(t, p);
      ++evals;
      if (h < cand.h_min) cand = {h, t, p};
    }
    if (cand.h_min < best.h_min) {
      best = cand;
    } else {
      step_t *= 0.5;
      step_p *= 0.5;
    }
  }
  return best;
}

// One capacity evaluation. chi, h_control and h_min are in bits; theta_min
// and phi_min locate the worst-case target found by the entropy search.
struct CapacityResult {
  double q = 0.0;
  double gamma = 0.5;
  double chi = 0.0;
  double h_control = 0.0;
  double h_min = 0.0;
  double theta_min = 0.0;
  double phi_min = 0.0;
};

namespace detail {

inline void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(name) + " must be in [0, 1], got " +
                                std::to_string(v));
}

inline CapacityResult finish_capacity(double q, double gamma, double h_control,
                                      const MinEntropyResult& m) {
  CapacityResult r;
  r.q = q;
  r.gamma = gamma;
  r.h_control = h_control;
  r.h_min = m.h_min;
  r.theta_min = m.theta;
  r.phi_min = m.phi;
  r.chi = 1.0 + h_control - m.h_min;
  // Subadditivity of the separable joint output bounds chi to [0, 1];
  // anything further out than roundoff means the search or the model broke.
  if (r.chi < -1e-9 || r.chi > 1.0 + 1e-9)
    throw ValidationError("capacity " + std::to_string(r.chi) + " outside [0, 1]");
  return r;
}

}  // namespace detail

// Holevo information of the switched depolarizing pair of strength q.
// The control coherence after the switch shrinks by 1 - 3q^2/4 while its
// populations survive, so the control entropy has a closed form; the
// worst-case joint entropy comes from the sphere search.
inline CapacityResult holevo_switch(double q, double gamma = 0.5) {
  detail::require_unit_interval(q, "depolarizing strength");
  detail::require_unit_interval(gamma, "control weight");

  const double s1 = 2.0 * gamma - 1.0;
  const double coh = 2.0 * std::sqrt(gamma * (1.0 - gamma));
  const StokesVector marginal{s1, coh * (1.0 - 0.75 * q * q), 0.0};
  const double h_control = von_neumann_entropy(density_from_stokes(marginal));

  const MinEntropyResult m = min_output_entropy([&](double t, double p) {
    return depolarizing_switch_mixture(q, SwitchInput(gamma, pure_state(t, p)));
  });
  return detail::finish_capacity(q, gamma, h_control, m);
}

// Capacity of the same two depolarizing channels in a fixed order, using
// an orthogonal input pair. The survival of a Bloch vector through both
// channels is (1 - q)^2, which pins the optimal ensemble's entropy.
inline double holevo_classical(double q) {
  detail::require_unit_interval(q, "depolarizing strength");
  const double r = (1.0 - q) * (1.0 - q);
  return 1.0 - binary_entropy(0.5 * (1.0 + r));
}

// Per-pair control coherences, s2[i][j] for the switched Pauli pair (i, j).
using S2Matrix = std::array<std::array<double, 4>, 4>;

// Capacity reconstructed from measured per-pair control coherences instead
// of the analytic branch states. Each pair (i, j) contributes a product of
// a control state with coherence scaled by s2[i][j] and the target rotated
// by the pair product, weighted by the depolarizing mixture at strength q.
inline CapacityResult holevo_from_branches(const S2Matrix& s2, double q,
                                           double gamma = 0.5) {
  detail::require_unit_interval(q, "depolarizing strength");
  detail::require_unit_interval(gamma, "control weight");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(s2[static_cast<size_t>(i)][static_cast<size_t>(j)]) > 1.0 + 1e-12)
        throw std::invalid_argument("branch coherence s2[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "] outside [-1, 1]");

  const auto w = depolarizing_mixture(q);
  const double s1 = 2.0 * gamma - 1.0;
  const double coh = 2.0 * std::sqrt(gamma * (1.0 - gamma));

  // Weighted control entries per pair: the control block (a, b) multiplies
  // the rotated target by one of these three scalars. Each per-pair control
  // state is validated once up front.
  std::array<double, 16> w_pop0{}, w_pop1{}, w_coh{};
  double mean_s2 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double wij = w[static_cast<size_t>(i)] * w[static_cast<size_t>(j)];
      const double sij = s2[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const ComplexMatrix ctrl = density_from_stokes({s1, coh * sij, 0.0}).matrix();
      const size_t idx = static_cast<size_t>(i * 4 + j);
      w_pop0[idx] = wij * ctrl(0, 0).real();
      w_pop1[idx] = wij * ctrl(1, 1).real();
      w_coh[idx] = wij * ctrl(0, 1).real();
      mean_s2 += wij * sij;
    }

  const double h_control =
      von_neumann_entropy(density_from_stokes({s1, coh * mean_s2, 0.0}));

  const MinEntropyResult m = min_output_entropy([&](double t, double p) {
    const detail::c2x2 rt = detail::shrink2(pure_state(t, p).matrix());
    std::array<complexd, 16> acc{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const size_t idx = static_cast<size_t>(i * 4 + j);
        const detail::c2x2& u = detail::pauli_product2(i, j);
        const detail::c2x2 rot = detail::mul2(detail::mul2(u, rt), detail::dag2(u));
        for (int r = 0; r < 2; ++r)
          for (int c = 0; c < 2; ++c) {
            const complexd v = rot[static_cast<size_t>(2 * r + c)];
            acc[static_cast<size_t>(r) * 4 + c] += w_pop0[idx] * v;
            acc[static_cast<size_t>(r) * 4 + c + 2] += w_coh[idx] * v;
            acc[static_cast<size_t>(r + 2) * 4 + c] += w_coh[idx] * v;
            acc[static_cast<size_t>(r + 2) * 4 + c + 2] += w_pop1[idx] * v;
          }
      }
    return DensityMatrix(detail::expand4(acc));
  });
  return detail::finish_capacity(q, gamma, h_control, m);
}

// The two entropies whose difference drives the capacity: the control
// marginal entropy (the gain) and the worst-case joint entropy (the cost).
struct EntropyRace {
  double h_control = 0.0;
  double h_min = 0.0;
};

inline EntropyRace entropy_race(double q, double gamma = 0.5) {
  const CapacityResult r = holevo_switch(q, gamma);
  return {r.h_control, r.h_min};
}

}  // namespace cswitch
