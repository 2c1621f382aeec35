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

#include "qdiscord/choi.hpp"

#include <cmath>
#include <sstream>

namespace qdiscord {

namespace {

// Gamma_m with lambda_m below this carry no weight and are left out of the
// Kraus set.
constexpr double kDropEigenvalue = 1e-14;

CMat4 local_b(const CMat2& v) { return tensor(CMat2::identity(), v); }

}  // namespace

CVec4 vectorize(const CMat2& a) { return {a(0, 0), a(0, 1), a(1, 0), a(1, 1)}; }

CMat2 devectorize(const CVec4& v) {
  CMat2 a;
  a(0, 0) = v[0];
  a(0, 1) = v[1];
  a(1, 0) = v[2];
  a(1, 1) = v[3];
  return a;
}

double sandwich_identity_residual(const CMat2& a, const CMat2& rho, const CMat2& b) {
  const CVec4 lhs = vectorize(a * rho * b);
  const CVec4 rhs = tensor(a, b.transpose()) * vectorize(rho);
  CVec4 diff;
  for (std::size_t i = 0; i < 4; ++i) diff[i] = lhs[i] - rhs[i];
  return norm(diff);
}

double KrausSet::completeness_residual() const {
  CMat2 sum;
  for (const auto& e : operators) sum += e.adjoint() * e;
  return frobenius_norm(sum - CMat2::identity());
}

CMat2 apply_channel(const KrausSet& k, const CMat2& rho) {
  CMat2 out;
  for (const auto& e : k.operators) out += e * rho * e.adjoint();
  return out;
}

CVec4 reference_state(double gamma) {
  return {std::cos(gamma / 2.0), 0.0, 0.0, std::sin(gamma / 2.0)};
}

CJDecomposition decompose(const DensityMatrix4& rho) {
  const CMat2 rho_b = partial_trace_a(rho);
  const HermEig2 marg = herm_eig(rho_b);
  if (marg.values[1] <= kMarginalRankTol) {
    std::ostringstream msg;
    msg << "b-marginal is pure (smaller eigenvalue " << marg.values[1] << ")";
    throw SingularMarginal(msg.str());
  }

  CJDecomposition d;
  for (std::size_t col = 0; col < 2; ++col)
    for (std::size_t i = 0; i < 2; ++i) d.basis_rotation(i, col) = marg.vectors[col][i];

  const CMat4 w = local_b(d.basis_rotation);
  d.rotated_state = w.adjoint() * rho.matrix() * w;

  // In the rotated basis rho^b is diag(mu1, mu2) with mu1 >= mu2, so
  // sqrt((rho^b)^T) = Omega directly and the unitary U of the general
  // construction is the identity.
  const double mu1 = std::clamp(marg.values[0], 0.0, 1.0);
  const double mu2 = std::clamp(marg.values[1], 0.0, 1.0);
  const double c = std::sqrt(mu1 / (mu1 + mu2));
  d.gamma = 2.0 * std::acos(std::clamp(c, 0.0, 1.0));
  d.omega = CMat2::diagonal({std::cos(d.gamma / 2.0), std::sin(d.gamma / 2.0)});
  const CMat2 omega_inv = CMat2::diagonal({1.0 / std::cos(d.gamma / 2.0), 1.0 / std::sin(d.gamma / 2.0)});

  const HermEig4 eig = herm_eig(d.rotated_state);
  for (std::size_t m = 0; m < 4; ++m) {
    d.lambdas[m] = std::max(eig.values[m], 0.0);
    d.gamma_ops[m] = devectorize(eig.vectors[m]);
    if (d.lambdas[m] < kDropEigenvalue) continue;
    d.kraus.operators.push_back(std::sqrt(d.lambdas[m]) * d.gamma_ops[m] * omega_inv);
  }
  return d;
}

CMat4 reconstruct_rotated(const CJDecomposition& d) {
  const CVec4 phi = reference_state(d.gamma);
  const CMat4 proj = outer(phi, phi);
  CMat4 out;
  for (const auto& e : d.kraus.operators) {
    const CMat4 ei = tensor(e, CMat2::identity());
    out += ei * proj * ei.adjoint();
  }
  return out;
}

DensityMatrix4 reconstruct(const CJDecomposition& d) {
  const CMat4 w = local_b(d.basis_rotation);
  return DensityMatrix4::from_matrix(w * reconstruct_rotated(d) * w.adjoint());
}

double marginal_identity_residual(const CJDecomposition& d) {
  CMat2 sum;
  for (std::size_t m = 0; m < 4; ++m) sum += d.lambdas[m] * (d.gamma_ops[m].adjoint() * d.gamma_ops[m]);
  return frobenius_norm(sum - partial_trace_a(d.rotated_state).transpose());
}

double channel_fidelity(const DensityMatrix4& rho, const CJDecomposition& d) {
  const CMat4 w = local_b(d.basis_rotation);
  const CMat4 rotated = w.adjoint() * rho.matrix() * w;
  const CVec4 phi = reference_state(d.gamma);
  return std::clamp(inner(phi, rotated * phi).real(), 0.0, 1.0);
}

}  // namespace qdiscord
