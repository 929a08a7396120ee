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

#include "cswitch/channels.hpp"
#include "cswitch/qmath.hpp"

namespace cswitch {

// Input to the switched channel: a target qubit and the control weight.
// gamma = 1 runs A after B on the control |0> branch alone (definite
// order); gamma = 0 runs the reverse; anything between superposes the two.
struct SwitchInput {
  double gamma;
  DensityMatrix target;

  SwitchInput(double gamma_, DensityMatrix target_)
      : gamma(gamma_), target(std::move(target_)) {
    if (!(gamma >= 0.0 && gamma <= 1.0))
      throw std::invalid_argument("switch control weight must be in [0, 1], got " +
                                  std::to_string(gamma));
    if (target.dim() != 2)
      throw std::invalid_argument("switch target must be a single qubit");
  }
};

// Control qubit sqrt(gamma)|0> + sqrt(1-gamma)|1> as a density matrix.
inline DensityMatrix control_density(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("control weight must be in [0, 1], got " +
                                std::to_string(gamma));
  const double c = std::sqrt(gamma * (1.0 - gamma));
  ComplexMatrix m(2);
  m(0, 0) = gamma;
  m(0, 1) = c;
  m(1, 0) = c;
  m(1, 1) = 1.0 - gamma;
  return DensityMatrix(m);
}

// Kraus set of the controlled-order arrangement of two qubit channels:
// one operator per pair (Ka, Kb), applying Ka Kb on the control |0> block
// and Kb Ka on the control |1> block. Pairs run in lexicographic order.
inline KrausChannel switch_kraus(const KrausChannel& chA, const KrausChannel& chB) {
  if (chA.dim() != 2 || chB.dim() != 2)
    throw std::invalid_argument("switched channels must act on qubits");
  const CptpReport ra = validate_cptp(chA);
  if (!ra.pass)
    throw std::invalid_argument("channel \"" + chA.label + "\" is not trace preserving (deviation " +
                                detail::format_double(ra.deviation) + ")");
  const CptpReport rb = validate_cptp(chB);
  if (!rb.pass)
    throw std::invalid_argument("channel \"" + chB.label + "\" is not trace preserving (deviation " +
                                detail::format_double(rb.deviation) + ")");

  ComplexMatrix e00(2), e11(2);
  e00(0, 0) = 1.0;
  e11(1, 1) = 1.0;

  KrausChannel out;
  out.label = "switch(" + chA.label + "," + chB.label + ")";
  out.operators.reserve(chA.operators.size() * chB.operators.size());
  for (const ComplexMatrix& ka : chA.operators)
    for (const ComplexMatrix& kb : chB.operators)
      out.operators.push_back(tensor(e00, ka * kb) + tensor(e11, kb * ka));
  return out;
}

// Joint control/target output of the switched pair of channels.
inline DensityMatrix apply_switch(const KrausChannel& chA, const KrausChannel& chB,
                                  const SwitchInput& in) {
  const KrausChannel sw = switch_kraus(chA, chB);
  const DensityMatrix joint(tensor(control_density(in.gamma).matrix(), in.target.matrix()));
  return apply_channel(sw, joint);
}

namespace detail {

// Plain 2x2 complex matrices for the branch accumulation loops. The
// general ComplexMatrix carries 4x4 storage, which costs real time when a
// capacity search evaluates the sixteen branches millions of times.
using c2x2 = std::array<complexd, 4>;

inline c2x2 mul2(const c2x2& a, const c2x2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline c2x2 dag2(const c2x2& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

inline c2x2 shrink2(const ComplexMatrix& m) {
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

inline const c2x2& pauli_product2(int i, int j) {
  static const auto table = [] {
    std::array<c2x2, 16> t{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        t[static_cast<size_t>(a) * 4 + b] = shrink2(pauli_product(a, b));
    return t;
  }();
  return table[static_cast<size_t>(i) * 4 + j];
}

// Adds weight * (joint output of the switched Pauli pair (i, j)) to the
// row-major 4x4 accumulator. The four control blocks are, in order: the
// forward product conjugation, the reversed one, and the two coherence
// terms with mixed dagger order.
inline void accumulate_pauli_pair(std::array<complexd, 16>& acc, int i, int j,
                                  double gamma, const c2x2& rho_t, double weight) {
  const c2x2& u = pauli_product2(i, j);
  const c2x2& v = pauli_product2(j, i);
  const c2x2 ur = mul2(u, rho_t);
  const c2x2 vr = mul2(v, rho_t);
  const c2x2 t00 = mul2(ur, dag2(u));
  const c2x2 t11 = mul2(vr, dag2(v));
  const c2x2 t01 = mul2(ur, dag2(v));
  const c2x2 t10 = mul2(vr, dag2(u));
  const double c = std::sqrt(gamma * (1.0 - gamma));
  const double w00 = weight * gamma;
  const double w11 = weight * (1.0 - gamma);
  const double wc = weight * c;
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      const size_t b = static_cast<size_t>(2 * r + s);
      acc[static_cast<size_t>(r) * 4 + s] += w00 * t00[b];
      acc[static_cast<size_t>(r) * 4 + s + 2] += wc * t01[b];
      acc[static_cast<size_t>(r + 2) * 4 + s] += wc * t10[b];
      acc[static_cast<size_t>(r + 2) * 4 + s + 2] += w11 * t11[b];
    }
}

inline ComplexMatrix expand4(const std::array<complexd, 16>& a) {
  ComplexMatrix m(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = a[static_cast<size_t>(r) * 4 + c];
  return m;
}

}  // namespace detail

// Joint output when both switched operations are single Paulis.
inline DensityMatrix pauli_pair_switch(int i, int j, const SwitchInput& in) {
  pauli_product(i, j);  // validates the indices
  std::array<complexd, 16> acc{};
  detail::accumulate_pauli_pair(acc, i, j, in.gamma, detail::shrink2(in.target.matrix()),
                                1.0);
  return DensityMatrix(detail::expand4(acc));
}

// Joint output of the switched depolarizing pair of strength q, computed
// as the Pauli-weighted mixture of the sixteen pair branches. Agrees with
// apply_switch on depolarizing_kraus(q) twice; this path skips the 16
// four-dimensional Kraus conjugations and is what the capacity searches
// call in their inner loop.
inline DensityMatrix depolarizing_switch_mixture(double q, const SwitchInput& in) {
  const auto w = depolarizing_mixture(q);
  const detail::c2x2 rho_t = detail::shrink2(in.target.matrix());
  std::array<complexd, 16> acc{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      detail::accumulate_pauli_pair(acc, i, j, in.gamma, rho_t,
                                    w[static_cast<size_t>(i)] * w[static_cast<size_t>(j)]);
  return DensityMatrix(detail::expand4(acc));
}

// Expectation of X on the control slot of a joint state.
inline double control_s2(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("control_s2 expects a two-qubit state");
  static const ComplexMatrix x_on_control = tensor(pauli(1), pauli(0));
  return (x_on_control * rho.matrix()).trace().real();
}

// Stokes components of the reduced control state.
inline StokesVector control_marginal_stokes(const DensityMatrix& rho) {
  return stokes_from_density(partial_trace(rho, Subsystem::control));
}

// Unnormalized target state conditioned on finding the control along
// |M> = cos(theta)|0> + e^{i phi} sin(theta)|1>. The trace of the result
// is the probability of that outcome.
inline ComplexMatrix project_control(const DensityMatrix& rho, double theta, double phi) {
  if (rho.dim() != 4)
    throw std::invalid_argument("project_control expects a two-qubit state");
  const std::array<complexd, 2> m = {std::cos(theta), std::polar(std::sin(theta), phi)};
  const ComplexMatrix& j = rho.matrix();
  ComplexMatrix out(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const complexd w = std::conj(m[static_cast<size_t>(a)]) * m[static_cast<size_t>(b)];
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out(r, c) += w * j(2 * a + r, 2 * b + c);
    }
  return out;
}

// Divide a conditional state by its weight. Rejects weights too small to
// normalize meaningfully.
inline DensityMatrix normalize_conditional(const ComplexMatrix& m) {
  if (m.dim() != 2) throw std::invalid_argument("normalize_conditional expects a qubit");
  const double tr = m.trace().real();
  if (tr <= 1e-14)
    throw std::invalid_argument("conditional state weight " + std::to_string(tr) +
                                " is too small to normalize");
  return DensityMatrix((1.0 / tr) * m);
}

}  // namespace cswitch
