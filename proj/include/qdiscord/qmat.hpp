// Copyright 2026 The qdiscord Authors
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

// Fixed-size complex linear algebra for one- and two-qubit operators.
//
// Matrices are dense and row-major. Two-qubit operators use the basis order
// |00>, |01>, |10>, |11> with the first factor being subsystem a, so the
// entry (2i+k, 2j+l) of a (x) b is a(i,j) * b(k,l).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>

#include "qdiscord/errors.hpp"

namespace qdiscord {

using cplx = std::complex<double>;

template <std::size_t N>
using CVec = std::array<cplx, N>;

using CVec2 = CVec<2>;
using CVec4 = CVec<4>;

template <std::size_t N>
struct CMat {
  static constexpr std::size_t dim = N;

  std::array<cplx, N * N> a{};

  cplx& operator()(std::size_t i, std::size_t j) { return a[i * N + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * N + j]; }

  static CMat zero() { return CMat{}; }

  static CMat identity() {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static CMat diagonal(const std::array<double, N>& d) {
    CMat m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  CMat adjoint() const {
    CMat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  CMat transpose() const {
    CMat r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  CMat conj() const {
    CMat r;
    for (std::size_t k = 0; k < N * N; ++k) r.a[k] = std::conj(a[k]);
    return r;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  CMat& operator+=(const CMat& o) {
    for (std::size_t k = 0; k < N * N; ++k) a[k] += o.a[k];
    return *this;
  }
  CMat& operator-=(const CMat& o) {
    for (std::size_t k = 0; k < N * N; ++k) a[k] -= o.a[k];
    return *this;
  }
  CMat& operator*=(cplx s) {
    for (auto& x : a) x *= s;
    return *this;
  }

  friend CMat operator+(CMat l, const CMat& r) { return l += r; }
  friend CMat operator-(CMat l, const CMat& r) { return l -= r; }
  friend CMat operator*(CMat m, cplx s) { return m *= s; }
  friend CMat operator*(cplx s, CMat m) { return m *= s; }
  friend CMat operator*(CMat m, double s) { return m *= cplx(s); }
  friend CMat operator*(double s, CMat m) { return m *= cplx(s); }

  friend CMat operator*(const CMat& l, const CMat& r) {
    CMat p;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const cplx lik = l(i, k);
        if (lik == cplx(0.0)) continue;
        for (std::size_t j = 0; j < N; ++j) p(i, j) += lik * r(k, j);
      }
    return p;
  }

  friend CVec<N> operator*(const CMat& m, const CVec<N>& v) {
    CVec<N> r{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r[i] += m(i, j) * v[j];
    return r;
  }

  friend bool operator==(const CMat&, const CMat&) = default;
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

template <std::size_t N>
double frobenius_norm(const CMat<N>& m) {
  double s = 0.0;
  for (const auto& x : m.a) s += std::norm(x);
  return std::sqrt(s);
}

template <std::size_t N>
double norm(const CVec<N>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

template <std::size_t N>
cplx inner(const CVec<N>& u, const CVec<N>& v) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += std::conj(u[i]) * v[i];
  return s;
}

/// |u><v|
template <std::size_t N>
CMat<N> outer(const CVec<N>& u, const CVec<N>& v) {
  CMat<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

template <std::size_t N>
double hermiticity_error(const CMat<N>& m) {
  return frobenius_norm(m - m.adjoint());
}

template <std::size_t N>
bool is_finite(const CMat<N>& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](const cplx& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

CMat4 tensor(const CMat2& a, const CMat2& b);

/// Traces out subsystem a; returns the reduced operator on b.
CMat2 partial_trace_a(const CMat4& m);

/// Traces out subsystem b; returns the reduced operator on a.
CMat2 partial_trace_b(const CMat4& m);

namespace pauli {
CMat2 x();
CMat2 y();
CMat2 z();
}  // namespace pauli

template <std::size_t N>
struct HermEig {
  std::array<double, N> values{};       // descending
  std::array<CVec<N>, N> vectors{};     // vectors[k] pairs with values[k]
};

using HermEig2 = HermEig<2>;
using HermEig4 = HermEig<4>;

inline constexpr double kHermitianTol = 1e-10;

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius mass drops
/// below 1e-14 (scaled by the norm of m when that exceeds one).
template <std::size_t N>
HermEig<N> herm_eig(const CMat<N>& m) {
  const double scale = std::max(1.0, frobenius_norm(m));
  if (!is_finite(m)) throw DomainError("herm_eig: non-finite matrix entry");
  if (hermiticity_error(m) > kHermitianTol * scale)
    throw DomainError("herm_eig: matrix is not Hermitian");

  CMat<N> A = m;
  CMat<N> V = CMat<N>::identity();
  const double tol = 1e-14 * scale;

  auto off_mass = [&A] {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (i != j) s += std::norm(A(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_mass() >= tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const cplx w = A(p, q);
        const double aw = std::abs(w);
        if (aw == 0.0) continue;
        const cplx phase = w / aw;
        const double tau = (A(q, q).real() - A(p, p).real()) / (2.0 * aw);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        CMat<N> J = CMat<N>::identity();
        J(p, p) = c;
        J(p, q) = s;
        J(q, p) = -s * std::conj(phase);
        J(q, q) = c * std::conj(phase);

        A = J.adjoint() * A * J;
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        V = V * J;
      }
    }
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&A](std::size_t i, std::size_t j) { return A(i, i).real() > A(j, j).real(); });

  HermEig<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t col = order[k];
    out.values[k] = A(col, col).real();
    for (std::size_t i = 0; i < N; ++i) out.vectors[k][i] = V(i, col);
  }
  return out;
}

/// Sum of lambda_k |v_k><v_k|.
template <std::size_t N>
CMat<N> reassemble(const HermEig<N>& e) {
  CMat<N> m;
  for (std::size_t k = 0; k < N; ++k) m += outer(e.vectors[k], e.vectors[k]) * e.values[k];
  return m;
}

/// Eigenvalues of a 2x2 Hermitian matrix in closed form, descending.
std::array<double, 2> qubit_eigenvalues(const CMat2& m);

/// Shannon entropy in bits of a probability vector; entries in [-1e-10, 0]
/// count as zero, anything more negative raises DomainError.
double spectrum_entropy(const double* p, std::size_t n);

/// -Tr(rho log2 rho).
template <std::size_t N>
double von_neumann_entropy(const CMat<N>& rho) {
  if constexpr (N == 2) {
    const auto ev = qubit_eigenvalues(rho);
    return spectrum_entropy(ev.data(), 2);
  } else {
    const auto e = herm_eig(rho);
    return spectrum_entropy(e.values.data(), N);
  }
}

/// H2(p) in bits. p may exceed [0,1] by at most 1e-12.
double binary_entropy(double p);

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix4 {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPositivityTol = 1e-10;

  /// Throws InvalidState when any invariant fails.
  static DensityMatrix4 from_matrix(const CMat4& m);

  const CMat4& matrix() const noexcept { return m_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  explicit DensityMatrix4(const CMat4& m) : m_(m) {}
  CMat4 m_;
};

inline CMat2 partial_trace_a(const DensityMatrix4& rho) { return partial_trace_a(rho.matrix()); }
inline CMat2 partial_trace_b(const DensityMatrix4& rho) { return partial_trace_b(rho.matrix()); }

}  // namespace qdiscord
