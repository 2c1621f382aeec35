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

// X states: two-qubit states supported on the diagonal and anti-diagonal.
// Their channel has the block form
//     [ M    0    ]        c = (0, 0, c_z)
//     [ 0  eta_zz ]
// and with a maximally mixed b-marginal the optimal measurement reduces to
// comparing theta = 0 against theta = pi/2 whenever the parameter k lies
// outside (-1, -2/3).

#pragma once

#include "qdiscord/bloch.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/qmat.hpp"

namespace qdiscord {

inline constexpr double kXPatternTol = 1e-10;

bool is_x_state(const DensityMatrix4& rho);

/// True when eta couples z only to itself and c has no transverse part.
bool has_x_block_form(const AffineChannel& ch, double tol = kXPatternTol);

/// f(phi) = |M (cos phi, sin phi)|^2 with M the transverse block of eta.
double f_phi(const AffineChannel& ch, double phi);

struct FMaximum {
  double eta_perp_sq = 0.0;
  double phi_star = 0.0;  // in [0, pi); 0 when f is constant
};

/// Largest eigenvalue of M^T M and its direction. Throws NotApplicable for
/// channels without the X block form.
FMaximum maximize_f(const AffineChannel& ch);

struct XStateParams {
  double eta_perp = 0.0;
  double c_z = 0.0;
  double eta_zz = 0.0;
  double a = 0.0;  // eta_perp^2 + c_z^2
  double b = 0.0;  // eta_zz c_z
  double c = 0.0;  // eta_zz^2 - eta_perp^2
  double k = 0.0;  // c / (b^2 - c a); meaningful only when k_defined
  bool k_defined = false;
  double phi_star = 0.0;
};

XStateParams x_state_params(const AffineChannel& ch);

/// s'(theta) = sqrt(a + 2 b cos(theta) + c cos^2(theta)) and t' with -2b, at
/// the optimal azimuth. Valid for gamma = pi/2.
double closed_form_s(const XStateParams& p, double theta);
double closed_form_t(const XStateParams& p, double theta);

/// k >= -2/3 or k <= -1 (with 1e-12 slack); true when k is undefined.
bool universal_sufficient(const XStateParams& p);

/// G(x) = sqrt(1 + k x^2) / x. DomainError when 1 + k x^2 < 0 or x outside (0, 1).
double G_func(double x, double k);

/// H(x) = G(x) ln((1 + x) / (1 - x)).
double H_func(double x, double k);

/// Closed-form classical correlation for X states with a maximally mixed
/// b-marginal in the range where the universal solutions suffice. Throws
/// NotApplicable otherwise.
DiscordReport analytic_discord_x(const DensityMatrix4& rho);

}  // namespace qdiscord
