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

#include <string>
#include <utility>
#include <vector>

#include "cswitch/qmath.hpp"

namespace cswitch {

// A channel as an explicit Kraus list. The named constructors below always
// produce trace-preserving sets; hand-built instances can be screened with
// validate_cptp.
struct KrausChannel {
  std::vector<ComplexMatrix> operators;
  std::string label;

  int dim() const {
    if (operators.empty())
      throw std::invalid_argument("Kraus channel \"" + label + "\" has no operators");
    return operators.front().dim();
  }
};

struct CptpReport {
  double deviation = 0.0;  // max-abs deviation of sum K^dag K from identity
  bool pass = false;
};

inline CptpReport validate_cptp(const KrausChannel& ch) {
  const int d = ch.dim();
  ComplexMatrix sum(d);
  for (const ComplexMatrix& k : ch.operators) {
    if (k.dim() != d)
      throw std::invalid_argument("Kraus channel \"" + ch.label +
                                  "\" mixes operator dimensions");
    sum += k.adjoint() * k;
  }
  CptpReport report;
  report.deviation = sum.max_abs_diff(ComplexMatrix::identity(d));
  report.pass = report.deviation <= 1e-10;
  return report;
}

// Pauli weights of the depolarizing channel of strength q: identity keeps
// 1 - 3q/4, each of X, Y, Z gets q/4.
inline std::array<double, 4> depolarizing_mixture(double q) {
  if (q < 0.0 || q > 1.0)
    throw std::invalid_argument("depolarizing strength must be in [0, 1], got " +
                                std::to_string(q));
  return {1.0 - 0.75 * q, 0.25 * q, 0.25 * q, 0.25 * q};
}

inline KrausChannel depolarizing_kraus(double q) {
  const auto w = depolarizing_mixture(q);
  KrausChannel ch;
  ch.label = "depolarizing(q=" + std::to_string(q) + ")";
  ch.operators.reserve(4);
  for (int i = 0; i < 4; ++i) ch.operators.push_back(std::sqrt(w[static_cast<size_t>(i)]) * pauli(i));
  return ch;
}

// Amplitude damping of strength g: |1> decays to |0> with probability g.
inline KrausChannel amplitude_damping_kraus(double g) {
  if (g < 0.0 || g > 1.0)
    throw std::invalid_argument("damping strength must be in [0, 1], got " +
                                std::to_string(g));
  ComplexMatrix k0(2), k1(2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - g);
  k1(0, 1) = std::sqrt(g);
  KrausChannel ch;
  ch.label = "amplitude_damping(g=" + std::to_string(g) + ")";
  ch.operators = {k0, k1};
  return ch;
}

// Phase damping of strength f: coherences shrink by 1 - f, populations stay.
inline KrausChannel phase_damping_kraus(double f) {
  if (f < 0.0 || f > 1.0)
    throw std::invalid_argument("damping strength must be in [0, 1], got " +
                                std::to_string(f));
  ComplexMatrix k0 = std::sqrt(1.0 - f) * ComplexMatrix::identity(2);
  ComplexMatrix k1(2), k2(2);
  k1(0, 0) = std::sqrt(f);
  k2(1, 1) = std::sqrt(f);
  KrausChannel ch;
  ch.label = "phase_damping(f=" + std::to_string(f) + ")";
  ch.operators = {k0, k1, k2};
  return ch;
}

// Apply ch to rho, sum of K rho K^dag. Precondition: ch is CPTP.
inline DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.dim() != rho.dim())
    throw std::invalid_argument("channel \"" + ch.label + "\" acts on dimension " +
                                std::to_string(ch.dim()) + ", state has " +
                                std::to_string(rho.dim()));
  ComplexMatrix out(rho.dim());
  for (const ComplexMatrix& k : ch.operators) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix(out);
}

// Definite-order composition, chA after chB. Kraus list is every product
// Ka * Kb in lexicographic (a, b) order.
inline KrausChannel compose_definite(const KrausChannel& chA, const KrausChannel& chB) {
  if (chA.dim() != chB.dim())
    throw std::invalid_argument("cannot compose channels of different dimension");
  KrausChannel out;
  out.label = chA.label + "*" + chB.label;
  out.operators.reserve(chA.operators.size() * chB.operators.size());
  for (const ComplexMatrix& ka : chA.operators)
    for (const ComplexMatrix& kb : chB.operators) out.operators.push_back(ka * kb);
  return out;
}

}  // namespace cswitch
