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

#include "qdiscord/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdiscord/choi.hpp"

namespace qdiscord {

namespace {

constexpr double kGammaTol = 1e-10;

double mixedness(double x) { return binary_entropy(0.5 * (1.0 + std::clamp(x, 0.0, 1.0))); }

}  // namespace

bool is_x_state(const DensityMatrix4& rho) {
  static constexpr std::size_t kOutside[8][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 3}, {2, 0}, {2, 3}, {3, 1}, {3, 2}};
  for (const auto& e : kOutside)
    if (std::abs(rho(e[0], e[1])) >= kXPatternTol) return false;
  return true;
}

bool has_x_block_form(const AffineChannel& ch, double tol) {
  return std::abs(ch.eta[0][2]) < tol && std::abs(ch.eta[1][2]) < tol && std::abs(ch.eta[2][0]) < tol &&
         std::abs(ch.eta[2][1]) < tol && std::abs(ch.c.x) < tol && std::abs(ch.c.y) < tol;
}

double f_phi(const AffineChannel& ch, double phi) {
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double u = ch.eta[0][0] * cp + ch.eta[0][1] * sp;
  const double v = ch.eta[1][0] * cp + ch.eta[1][1] * sp;
  return u * u + v * v;
}

FMaximum maximize_f(const AffineChannel& ch) {
  if (!has_x_block_form(ch)) throw NotApplicable("channel does not have the X block form");
  const auto& e = ch.eta;
  const double g00 = e[0][0] * e[0][0] + e[1][0] * e[1][0];
  const double g11 = e[0][1] * e[0][1] + e[1][1] * e[1][1];
  const double g01 = e[0][0] * e[0][1] + e[1][0] * e[1][1];
  const double half_diff = 0.5 * (g00 - g11);
  const double radius = std::hypot(half_diff, g01);
  FMaximum out;
  out.eta_perp_sq = 0.5 * (g00 + g11) + radius;
  if (radius > 1e-14 * std::max(1.0, out.eta_perp_sq)) {
    double phi = 0.5 * std::atan2(g01, half_diff);
    if (phi < 0.0) phi += kPi;
    if (phi >= kPi) phi -= kPi;
    out.phi_star = phi;
  }
  return out;
}

XStateParams x_state_params(const AffineChannel& ch) {
  const FMaximum fm = maximize_f(ch);
  XStateParams p;
  p.eta_perp = std::sqrt(std::max(fm.eta_perp_sq, 0.0));
  p.phi_star = fm.phi_star;
  p.c_z = ch.c.z;
  p.eta_zz = ch.eta[2][2];
  p.a = fm.eta_perp_sq + p.c_z * p.c_z;
  p.b = p.eta_zz * p.c_z;
  p.c = p.eta_zz * p.eta_zz - fm.eta_perp_sq;
  const double denom = p.b * p.b - p.c * p.a;
  if (std::abs(denom) > 1e-14) {
    p.k = p.c / denom;
    p.k_defined = true;
  }
  return p;
}

double closed_form_s(const XStateParams& p, double theta) {
  const double ct = std::cos(theta);
  return std::sqrt(std::max(0.0, p.a + 2.0 * p.b * ct + p.c * ct * ct));
}

double closed_form_t(const XStateParams& p, double theta) {
  const double ct = std::cos(theta);
  return std::sqrt(std::max(0.0, p.a - 2.0 * p.b * ct + p.c * ct * ct));
}

bool universal_sufficient(const XStateParams& p) {
  if (!p.k_defined) return true;
  return p.k >= -2.0 / 3.0 - 1e-12 || p.k <= -1.0 + 1e-12;
}

double G_func(double x, double k) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("G_func: x must lie in (0, 1)");
  const double r = 1.0 + k * x * x;
  if (r < 0.0) {
    std::ostringstream msg;
    msg << "G_func: 1 + k x^2 < 0 for x=" << x << ", k=" << k;
    throw DomainError(msg.str());
  }
  return std::sqrt(r) / x;
}

double H_func(double x, double k) { return G_func(x, k) * 2.0 * std::atanh(x); }

DiscordReport analytic_discord_x(const DensityMatrix4& rho) {
  if (!is_x_state(rho)) throw NotApplicable("state is not an X state");
  CJDecomposition d;
  try {
    d = decompose(rho);
  } catch (const SingularMarginal&) {
    throw NotApplicable("b-marginal is pure");
  }
  if (std::abs(d.gamma - 0.5 * kPi) > kGammaTol) {
    std::ostringstream msg;
    msg << "b-marginal is not maximally mixed (gamma/pi = " << d.gamma / kPi << ")";
    throw NotApplicable(msg.str());
  }
  const AffineChannel ch = affine_from_kraus(d.kraus);
  if (!has_x_block_form(ch)) throw NotApplicable("channel does not have the X block form");
  const XStateParams p = x_state_params(ch);
  if (!universal_sufficient(p)) {
    std::ostringstream msg;
    msg << "k = " << p.k << " lies in (-1, -2/3); universal solutions may not be optimal";
    throw NotApplicable(msg.str());
  }

  // With gamma = pi/2 both outcomes have probability 1/2.
  const double s_a = channel_marginal_entropy(ch, d.gamma);
  const double sym_purity = closed_form_s(p, 0.5 * kPi);
  const double sym_value = s_a - mixedness(sym_purity);
  const double asym_value =
      s_a - 0.5 * mixedness(std::abs(p.c_z + p.eta_zz)) - 0.5 * mixedness(std::abs(p.c_z - p.eta_zz));

  const MeasurementAngles sym_ch{0.5 * kPi, p.phi_star};
  const MeasurementAngles asym_ch{0.0, 0.0};
  const bool asym_wins = asym_value >= sym_value - 1e-10;

  DiscordReport r;
  r.method = Method::xstate_analytic;
  r.mutual_info = mutual_information(rho);
  r.classical_corr = asym_wins ? std::max(asym_value, sym_value) : sym_value;
  r.discord = r.mutual_info - r.classical_corr;
  r.optimal = fold_angles(to_original_frame(d.basis_rotation, asym_wins ? asym_ch : sym_ch));

  StationaryPoint asym{fold_angles(to_original_frame(d.basis_rotation, asym_ch)), asym_value,
                       stationarity_norm(ch, d.gamma, asym_ch), SolutionClass::asymmetric};
  StationaryPoint sym{fold_angles(to_original_frame(d.basis_rotation, sym_ch)), sym_value,
                      stationarity_norm(ch, d.gamma, sym_ch), SolutionClass::symmetric};
  if (asym_wins) {
    r.stationary_points = {asym, sym};
  } else {
    r.stationary_points = {sym, asym};
  }
  return r;
}

}  // namespace qdiscord
