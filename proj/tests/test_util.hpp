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

// Small naive matrix toolkit for test oracles. Deliberately independent of
// the library's fixed-size matrices: reference states are assembled here
// and only converted at the comparison boundary.

#pragma once

#include <complex>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "cswitch/qmath.hpp"

namespace testutil {

using complexd = std::complex<double>;
using Mat = std::vector<std::vector<complexd>>;

inline Mat zeros(int n) { return Mat(static_cast<size_t>(n), std::vector<complexd>(static_cast<size_t>(n), 0.0)); }

inline Mat eye(int n) {
  Mat m = zeros(n);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const size_t n = a.size();
  Mat out = zeros(static_cast<int>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t k = 0; k < n; ++k)
      for (size_t c = 0; c < n; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

inline Mat add(const Mat& a, const Mat& b) {
  Mat out = a;
  for (size_t r = 0; r < a.size(); ++r)
    for (size_t c = 0; c < a.size(); ++c) out[r][c] += b[r][c];
  return out;
}

inline Mat scale(complexd s, const Mat& a) {
  Mat out = a;
  for (auto& row : out)
    for (auto& v : row) v *= s;
  return out;
}

inline Mat dagger(const Mat& a) {
  const size_t n = a.size();
  Mat out = zeros(static_cast<int>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) out[r][c] = std::conj(a[c][r]);
  return out;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const size_t na = a.size(), nb = b.size();
  Mat out = zeros(static_cast<int>(na * nb));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j)
      for (size_t k = 0; k < nb; ++k)
        for (size_t l = 0; l < nb; ++l) out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
  return out;
}

inline complexd trace(const Mat& a) {
  complexd t = 0.0;
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
  double m = 0.0;
  for (size_t r = 0; r < a.size(); ++r)
    for (size_t c = 0; c < a.size(); ++c) m = std::max(m, std::abs(a[r][c] - b[r][c]));
  return m;
}

// Literal Pauli definitions, kept separate from the library's table.
inline Mat sigma(int i) {
  Mat m = zeros(2);
  switch (i) {
    case 0: m[0][0] = 1.0; m[1][1] = 1.0; break;
    case 1: m[0][1] = 1.0; m[1][0] = 1.0; break;
    case 2: m[0][1] = complexd(0.0, -1.0); m[1][0] = complexd(0.0, 1.0); break;
    default: m[0][0] = 1.0; m[1][1] = -1.0; break;
  }
  return m;
}

inline Mat from_cswitch(const cswitch::ComplexMatrix& m) {
  Mat out = zeros(m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) out[static_cast<size_t>(r)][static_cast<size_t>(c)] = m(r, c);
  return out;
}

inline cswitch::ComplexMatrix to_cswitch(const Mat& m) {
  cswitch::ComplexMatrix out(static_cast<int>(m.size()));
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < m.size(); ++c) out(static_cast<int>(r), static_cast<int>(c)) = m[r][c];
  return out;
}

inline double max_abs_diff(const cswitch::ComplexMatrix& a, const Mat& b) {
  return max_abs_diff(from_cswitch(a), b);
}

inline double uniform(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Density matrix of a Bloch vector drawn uniformly from the unit ball.
inline Mat random_density(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  double x = normal(rng), y = normal(rng), z = normal(rng);
  const double n = std::max(std::sqrt(x * x + y * y + z * z), 1e-300);
  const double r = std::cbrt(uniform(rng)) / n;
  x *= r; y *= r; z *= r;
  Mat m = zeros(2);
  m[0][0] = 0.5 * (1.0 + z);
  m[1][1] = 0.5 * (1.0 - z);
  m[0][1] = 0.5 * complexd(x, y);
  m[1][0] = 0.5 * complexd(x, -y);
  return m;
}

// |psi><psi| for |psi> = cos(t/2)|0> + e^{i p} sin(t/2)|1>, Haar-ish angles.
inline Mat random_pure(std::mt19937_64& rng) {
  const double t = std::acos(1.0 - 2.0 * uniform(rng));
  const double p = 2.0 * 3.14159265358979323846 * uniform(rng);
  const complexd c0 = std::cos(t / 2.0);
  const complexd c1 = std::polar(std::sin(t / 2.0), p);
  Mat m = zeros(2);
  m[0][0] = c0 * std::conj(c0);
  m[0][1] = c0 * std::conj(c1);
  m[1][0] = c1 * std::conj(c0);
  m[1][1] = c1 * std::conj(c1);
  return m;
}

inline std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

}  // namespace testutil
