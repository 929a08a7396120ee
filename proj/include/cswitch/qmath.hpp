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

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cswitch {

using complexd = std::complex<double>;

// Thrown when a quantum object fails a structural check (hermiticity,
// trace, positivity). Argument errors use std::invalid_argument instead.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by file loaders; messages carry 1-based row numbers where known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
inline constexpr double hermitian = 1e-12;
inline constexpr double trace = 1e-12;
inline constexpr double psd = 1e-10;       // eigenvalues may dip this far below 0
inline constexpr double eig_input = 1e-10; // hermiticity required by eig_hermitian
}  // namespace tol

// Dense complex matrix of dimension 2 or 4, row-major inline storage.
// Small and fixed-size on purpose: every state in this library is a qubit
// or a qubit pair, and capacity searches evaluate millions of them.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim) : dim_(dim) {
    if (dim != 2 && dim != 4)
      throw std::invalid_argument("ComplexMatrix dimension must be 2 or 4, got " +
                                  std::to_string(dim));
  }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  complexd& operator()(int r, int c) {
    assert(r >= 0 && r < dim_ && c >= 0 && c < dim_);
    return a_[static_cast<size_t>(r) * dim_ + c];
  }
  const complexd& operator()(int r, int c) const {
    assert(r >= 0 && r < dim_ && c >= 0 && c < dim_);
    return a_[static_cast<size_t>(r) * dim_ + c];
  }

  complexd trace() const {
    complexd t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  double max_abs() const {
    double m = 0.0;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) m = std::max(m, std::abs((*this)(r, c)));
    return m;
  }

  double max_abs_diff(const ComplexMatrix& other) const {
    require_same_dim(other);
    double m = 0.0;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c)
        m = std::max(m, std::abs((*this)(r, c) - other(r, c)));
    return m;
  }

  // max |m(r,c) - conj(m(c,r))|, zero iff exactly Hermitian
  double hermiticity_deviation() const {
    double m = 0.0;
    for (int r = 0; r < dim_; ++r)
      for (int c = r; c < dim_; ++c)
        m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  ComplexMatrix& operator*=(complexd s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, complexd s) { return a *= s; }
  friend ComplexMatrix operator*(complexd s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    const int n = a.dim_;
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) {
        const complexd ark = a(r, k);
        if (ark == 0.0) continue;
        for (int c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

 private:
  void require_same_dim(const ComplexMatrix& o) const {
    if (dim_ != o.dim_)
      throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(dim_) +
                                  " vs " + std::to_string(o.dim_));
  }

  int dim_;
  std::array<complexd, 16> a_{};  // stride is dim_, tail unused for dim 2
};

// Pauli matrix by index: 0 identity, 1 X, 2 Y, 3 Z.
inline const ComplexMatrix& pauli(int i) {
  static const std::array<ComplexMatrix, 4> table = [] {
    std::array<ComplexMatrix, 4> t{ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
                                   ComplexMatrix(2)};
    t[0](0, 0) = 1.0;
    t[0](1, 1) = 1.0;
    t[1](0, 1) = 1.0;
    t[1](1, 0) = 1.0;
    t[2](0, 1) = complexd(0.0, -1.0);
    t[2](1, 0) = complexd(0.0, 1.0);
    t[3](0, 0) = 1.0;
    t[3](1, 1) = -1.0;
    return t;
  }();
  if (i < 0 || i > 3)
    throw std::invalid_argument("Pauli index must be in 0..3, got " + std::to_string(i));
  return table[static_cast<size_t>(i)];
}

// Cached product pauli(i) * pauli(j); the branch accumulation asks for
// these sixteen matrices constantly.
inline const ComplexMatrix& pauli_product(int i, int j) {
  static const auto table = [] {
    std::array<ComplexMatrix, 16> t{
        ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
        ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
        ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
        ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2)};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) t[static_cast<size_t>(a) * 4 + b] = pauli(a) * pauli(b);
    return t;
  }();
  if (i < 0 || i > 3 || j < 0 || j > 3)
    throw std::invalid_argument("Pauli index must be in 0..3");
  return table[static_cast<size_t>(i) * 4 + j];
}

// Kronecker product of two single-qubit matrices. Composite basis index is
// 2 * control + target with `a` acting on the control slot.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2)
    throw std::invalid_argument("tensor expects two 2x2 factors");
  ComplexMatrix out(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const complexd aij = a(i, j);
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = aij * b(k, l);
    }
  return out;
}

namespace detail {

// Eigenvalues of a Hermitian 2x2 or 4x4 by cyclic complex Jacobi sweeps,
// written into ev (descending). The input is symmetrized first so callers
// may pass matrices that are Hermitian only to roundoff.
inline void hermitian_eigenvalues(const ComplexMatrix& m, std::array<double, 4>& ev) {
  const int n = m.dim();
  std::array<complexd, 16> a{};
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      a[static_cast<size_t>(r) * n + c] = 0.5 * (m(r, c) + std::conj(m(c, r)));

  auto at = [&](int r, int c) -> complexd& { return a[static_cast<size_t>(r) * n + c]; };

  double scale = 0.0;
  for (int i = 0; i < n * n; ++i) scale = std::max(scale, std::abs(a[static_cast<size_t>(i)]));
  scale = std::max(scale, 1e-300);

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(p, q)));
    if (off <= 1e-15 * scale) break;

    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const complexd apq = at(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-18 * scale) continue;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complexd phase = apq / mag;

        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const complexd akp = at(k, p);
          const complexd akq = at(k, q);
          at(k, p) = c * akp - s * std::conj(phase) * akq;
          at(k, q) = s * phase * akp + c * akq;
          at(p, k) = std::conj(at(k, p));
          at(q, k) = std::conj(at(k, q));
        }
        at(p, p) = c * c * app + s * s * aqq - 2.0 * s * c * mag;
        at(q, q) = s * s * app + c * c * aqq + 2.0 * s * c * mag;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
  }

  ev.fill(0.0);
  for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = at(i, i).real();
  std::sort(ev.begin(), ev.begin() + n, std::greater<double>());
}

inline std::string format_double(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace detail

// Eigenvalues of a Hermitian matrix, descending. Rejects inputs whose
// hermiticity deviation exceeds tol::eig_input.
inline std::vector<double> eig_hermitian(const ComplexMatrix& m) {
  const double dev = m.hermiticity_deviation();
  if (dev > tol::eig_input)
    throw ValidationError("eig_hermitian input not Hermitian (deviation " +
                          detail::format_double(dev) + " exceeds " +
                          detail::format_double(tol::eig_input) + ")");
  std::array<double, 4> ev{};
  detail::hermitian_eigenvalues(m, ev);
  return std::vector<double>(ev.begin(), ev.begin() + m.dim());
}

// Validated density matrix. Construction checks hermiticity, unit trace
// and positivity, and caches the spectrum; the spectrum is what every
// entropy evaluation downstream actually consumes.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m) : m_(m) {
    const double hdev = m_.hermiticity_deviation();
    if (hdev > tol::hermitian)
      throw ValidationError("density matrix not Hermitian (deviation " +
                            detail::format_double(hdev) + " exceeds " +
                            detail::format_double(tol::hermitian) + ")");
    const complexd tr = m_.trace();
    if (std::abs(tr - 1.0) > tol::trace)
      throw ValidationError("density matrix trace deviates from 1 by " +
                            detail::format_double(std::abs(tr - 1.0)));
    detail::hermitian_eigenvalues(m_, spectrum_);
    const double lo = spectrum_[static_cast<size_t>(m_.dim()) - 1];
    if (lo < -tol::psd)
      throw ValidationError("density matrix not positive semidefinite (eigenvalue " +
                            detail::format_double(lo) + ")");
  }

  const ComplexMatrix& matrix() const { return m_; }
  int dim() const { return m_.dim(); }

  // Descending, may contain values in [-tol::psd, 0) from roundoff.
  std::span<const double> spectrum() const {
    return {spectrum_.data(), static_cast<size_t>(m_.dim())};
  }

 private:
  ComplexMatrix m_;
  std::array<double, 4> spectrum_{};
};

enum class Subsystem { control, target };

// Trace out one qubit of a two-qubit state.
inline DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (rho.dim() != 4)
    throw std::invalid_argument("partial_trace expects a two-qubit state");
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(2);
  if (keep == Subsystem::control) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  } else {
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) out(k, l) = m(k, l) + m(2 + k, 2 + l);
  }
  return DensityMatrix(out);
}

// Von Neumann entropy in bits from the cached spectrum. Eigenvalues in
// [-tol::psd, 0) count as 0.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  double h = 0.0;
  for (double lam : rho.spectrum()) {
    if (lam < -tol::psd)
      throw ValidationError("entropy of a state with eigenvalue " +
                            detail::format_double(lam));
    if (lam > 0.0) h -= lam * std::log2(lam);
  }
  return h;
}

// Binary Shannon entropy in bits; accepts p within 1e-12 outside [0, 1].
inline double binary_entropy(double p) {
  if (p < -1e-12 || p > 1.0 + 1e-12)
    throw std::invalid_argument("binary_entropy argument " + std::to_string(p) +
                                " outside [0, 1]");
  p = std::clamp(p, 0.0, 1.0);
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

// Bloch components of a qubit state: s1 from the populations, s2 from the
// real part of the upper coherence, s3 from its imaginary part.
struct StokesVector {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;

  double norm() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }
};

inline StokesVector stokes_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::invalid_argument("stokes_from_density expects a qubit");
  const ComplexMatrix& m = rho.matrix();
  StokesVector s;
  s.s1 = 2.0 * m(0, 0).real() - 1.0;
  s.s2 = 2.0 * m(0, 1).real();
  s.s3 = 2.0 * m(0, 1).imag();
  return s;
}

inline DensityMatrix density_from_stokes(const StokesVector& s) {
  if (s.norm() > 1.0 + 1e-10)
    throw std::invalid_argument("Stokes vector norm " + std::to_string(s.norm()) +
                                " exceeds 1");
  ComplexMatrix m(2);
  m(0, 0) = 0.5 * (1.0 + s.s1);
  m(1, 1) = 0.5 * (1.0 - s.s1);
  m(0, 1) = 0.5 * complexd(s.s2, s.s3);
  m(1, 0) = 0.5 * complexd(s.s2, -s.s3);
  return DensityMatrix(m);
}

// Pure qubit state from sphere angles, |psi> = cos(t/2)|0> + e^{i phi} sin(t/2)|1>.
inline DensityMatrix pure_state(double theta, double phi) {
  const complexd c0 = std::cos(theta / 2.0);
  const complexd c1 = std::polar(std::sin(theta / 2.0), phi);
  ComplexMatrix m(2);
  m(0, 0) = c0 * std::conj(c0);
  m(0, 1) = c0 * std::conj(c1);
  m(1, 0) = c1 * std::conj(c0);
  m(1, 1) = c1 * std::conj(c1);
  return DensityMatrix(m);
}

}  // namespace cswitch
