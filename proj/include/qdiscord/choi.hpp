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

// Channel-state duality with a non-maximally entangled reference.
//
// A two-qubit state whose b-marginal has full rank is written as
//   rho = (I (x) V) [ sum_m (E_m (x) I) |Phi><Phi| (E_m^dagger (x) I) ] (I (x) V^dagger)
// with |Phi> = cos(gamma/2)|00> + sin(gamma/2)|11>, V the eigenbasis of the
// b-marginal (larger eigenvalue first) and {E_m} a trace-preserving Kraus set.

#pragma once

#include <array>
#include <vector>

#include "qdiscord/qmat.hpp"

namespace qdiscord {

/// |A>> with component (2i + j) equal to A(i, j).
CVec4 vectorize(const CMat2& a);
CMat2 devectorize(const CVec4& v);

/// || |A rho B>> - (A (x) B^T)|rho>> ||, which vanishes identically.
double sandwich_identity_residual(const CMat2& a, const CMat2& rho, const CMat2& b);

struct KrausSet {
  std::vector<CMat2> operators;

  /// || sum E^dagger E - I ||_F
  double completeness_residual() const;
};

CMat2 apply_channel(const KrausSet& k, const CMat2& rho);

/// Smaller b-marginal eigenvalue at or below this is treated as a pure marginal.
inline constexpr double kMarginalRankTol = 1e-8;

struct CJDecomposition {
  double gamma = 0.0;                 // Schmidt angle, in (0, pi/2]
  CMat2 basis_rotation;               // V: columns are the b-marginal eigenvectors
  std::array<double, 4> lambdas{};    // eigenvalues of the rotated state, descending
  std::array<CMat2, 4> gamma_ops{};   // devectorized eigenvectors
  KrausSet kraus;
  CMat2 omega;                        // diag(cos(gamma/2), sin(gamma/2))
  CMat4 rotated_state;                // (I (x) V^dagger) rho (I (x) V)
};

/// |Phi> = cos(gamma/2)|00> + sin(gamma/2)|11>.
CVec4 reference_state(double gamma);

/// Throws SingularMarginal when the smaller eigenvalue of the b-marginal is
/// at or below kMarginalRankTol.
CJDecomposition decompose(const DensityMatrix4& rho);

/// Rebuilds the state in the original basis from the Kraus set and |Phi>.
DensityMatrix4 reconstruct(const CJDecomposition& d);

/// Same as reconstruct but stays in the rotated basis and skips validation.
CMat4 reconstruct_rotated(const CJDecomposition& d);

/// || sum lambda_m Gamma_m^dagger Gamma_m - (rho^b_rot)^T ||_F
double marginal_identity_residual(const CJDecomposition& d);

/// Schumacher fidelity <Phi| rho_rot |Phi>.
double channel_fidelity(const DensityMatrix4& rho, const CJDecomposition& d);

}  // namespace qdiscord
