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

#include "qdiscord/qmat.hpp"

#include <sstream>

namespace qdiscord {

CMat4 tensor(const CMat2& a, const CMat2& b) {
  CMat4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

CMat2 partial_trace_a(const CMat4& m) {
  CMat2 r;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l) r(k, l) = m(k, l) + m(2 + k, 2 + l);
  return r;
}

CMat2 partial_trace_b(const CMat4& m) {
  CMat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return r;
}

namespace pauli {
CMat2 x() {
  CMat2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}
CMat2 y() {
  CMat2 m;
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}
CMat2 z() {
  CMat2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}
}  // namespace pauli

std::array<double, 2> qubit_eigenvalues(const CMat2& m) {
  if (hermiticity_error(m) > kHermitianTol * std::max(1.0, frobenius_norm(m)))
    throw DomainError("qubit_eigenvalues: matrix is not Hermitian");
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double half_tr = 0.5 * (a + d);
  const double r = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return {half_tr + r, half_tr - r};
}

double spectrum_entropy(const double* p, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = p[i];
    if (x < -1e-10) {
      std::ostringstream msg;
      msg << "entropy: negative eigenvalue " << x;
      throw DomainError(msg.str());
    }
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

double binary_entropy(double p) {
  if (!(p >= -1e-12 && p <= 1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "binary_entropy: probability " << p << " outside [0,1]";
    throw DomainError(msg.str());
  }
  p = std::clamp(p, 0.0, 1.0);
  // Evaluate on the smaller branch so that H2(p) == H2(1 - p) for p > 1/2.
  const double lo = p <= 0.5 ? p : 1.0 - p;
  const double hi = 1.0 - lo;
  double h = 0.0;
  if (lo > 0.0) h -= lo * std::log2(lo);
  if (hi > 0.0) h -= hi * std::log2(hi);
  return h;
}

DensityMatrix4 DensityMatrix4::from_matrix(const CMat4& m) {
  if (!is_finite(m)) throw InvalidState("density matrix has a non-finite entry");
  const double herm = hermiticity_error(m);
  if (herm >= kHermitianTol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (||m - m^dagger||_F = " << herm << ")";
    throw InvalidState(msg.str());
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) >= kTraceTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "density matrix trace is " << tr << ", expected 1";
    throw InvalidState(msg.str());
  }
  const auto e = herm_eig(m);
  if (e.values[3] < -kPositivityTol) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite (min eigenvalue " << e.values[3] << ")";
    throw InvalidState(msg.str());
  }
  return DensityMatrix4(m);
}

}  // namespace qdiscord
