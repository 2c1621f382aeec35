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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdiscord/discord.hpp"

namespace qdiscord {

namespace {

constexpr double kTwoPi = 2.0 * kPi;

double wrap_two_pi(double phi) {
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return phi;
}

/// Bloch rotation R with R n = axis of V Pi(n) V^dagger.
Mat3 bloch_rotation(const CMat2& v) {
  const std::array<CMat2, 3> sigma{pauli::x(), pauli::y(), pauli::z()};
  Mat3 r{};
  for (std::size_t k = 0; k < 3; ++k) {
    const CMat2 rotated = v * sigma[k] * v.adjoint();
    for (std::size_t j = 0; j < 3; ++j) r[j][k] = 0.5 * (sigma[j] * rotated).trace().real();
  }
  return r;
}

Mat3 transposed(const Mat3& m) {
  Mat3 t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = m[j][i];
  return t;
}

double clamp_purity(double x) { return std::clamp(x, 0.0, 1.0); }

/// H2((1 + x) / 2)
double mixedness(double x) { return binary_entropy(0.5 * (1.0 + clamp_purity(x))); }

/// log2(sqrt((1 + x) / (1 - x)))
double log_ratio(double x) {
  x = std::min(clamp_purity(x), kPurityClamp);
  return std::atanh(x) / std::numbers::ln2;
}

}  // namespace

MeasurementAngles normalize_angles(MeasurementAngles a) {
  double theta = std::fmod(a.theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  double phi = a.phi;
  if (theta > kPi) {
    theta = kTwoPi - theta;
    phi += kPi;
  }
  return {theta, wrap_two_pi(phi)};
}

MeasurementAngles fold_angles(MeasurementAngles a) {
  a = normalize_angles(a);
  if (a.theta > 0.5 * kPi) {
    a.theta = kPi - a.theta;
    a.phi = wrap_two_pi(a.phi + kPi);
  }
  if (a.theta < 1e-12) {
    a.theta = 0.0;
    a.phi = 0.0;
  } else if (std::abs(a.theta - 0.5 * kPi) < 1e-12 && a.phi >= kPi) {
    a.phi -= kPi;
  }
  return a;
}

BlochVec axis_of(MeasurementAngles a) {
  return {std::sin(a.theta) * std::cos(a.phi), std::sin(a.theta) * std::sin(a.phi), std::cos(a.theta)};
}

MeasurementAngles angles_of(const BlochVec& axis) {
  const double n = axis.norm();
  if (n == 0.0) return {0.0, 0.0};
  const double rho = std::hypot(axis.x, axis.y);
  const double theta = std::atan2(rho, axis.z);
  const double phi = rho < 1e-15 * n ? 0.0 : wrap_two_pi(std::atan2(axis.y, axis.x));
  return {theta, phi};
}

double axis_distance(MeasurementAngles a, MeasurementAngles b) {
  const BlochVec u = axis_of(a);
  const BlochVec v = axis_of(b);
  const BlochVec cross{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
  return std::atan2(cross.norm(), std::abs(u.dot(v)));
}

// In the channel frame the azimuth enters the steered states with the
// opposite sign to the measurement basis, so a channel-frame pair
// (theta, phi) is the projector with Bloch axis (sin t cos p, -sin t sin p, cos t)
// in the rotated b-basis.
MeasurementAngles to_original_frame(const CMat2& basis_rotation, MeasurementAngles channel) {
  const BlochVec rotated{std::sin(channel.theta) * std::cos(channel.phi),
                         -std::sin(channel.theta) * std::sin(channel.phi), std::cos(channel.theta)};
  return angles_of(bloch_rotation(basis_rotation) * rotated);
}

MeasurementAngles to_channel_frame(const CMat2& basis_rotation, MeasurementAngles original) {
  const BlochVec n = transposed(bloch_rotation(basis_rotation)) * axis_of(original);
  const MeasurementAngles a = angles_of({n.x, -n.y, n.z});
  return a;
}

double channel_marginal_entropy(const AffineChannel& ch, double gamma) {
  return mixedness(ch.apply({0.0, 0.0, std::cos(gamma)}).norm());
}

double conditional_entropy_channel(const AffineChannel& ch, double gamma, MeasurementAngles a) {
  const auto [p1, p2] = conditional_probabilities(gamma, a.theta);
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const double ct = std::cos(a.theta), st = std::sin(a.theta);
  const double cp = std::cos(a.phi), sp = std::sin(a.phi);
  double h = 0.0;
  if (p1 >= kDegenerateOutcome) {
    const double d1 = 1.0 + cg * ct;
    const BlochVec s{sg * st * cp / d1, sg * st * sp / d1, (cg + ct) / d1};
    h += p1 * mixedness(ch.apply(s).norm());
  }
  if (p2 >= kDegenerateOutcome) {
    const double d2 = 1.0 - cg * ct;
    const BlochVec t{-sg * st * cp / d2, -sg * st * sp / d2, (cg - ct) / d2};
    h += p2 * mixedness(ch.apply(t).norm());
  }
  return h;
}

double objective(const AffineChannel& ch, double gamma, MeasurementAngles a) {
  return channel_marginal_entropy(ch, gamma) - conditional_entropy_channel(ch, gamma, a);
}

double Gradient::norm() const { return std::hypot(d_theta, d_phi); }

Gradient grad_objective(const AffineChannel& ch, double gamma, MeasurementAngles a) {
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const double ct = std::cos(a.theta), st = std::sin(a.theta);
  const double cp = std::cos(a.phi), sp = std::sin(a.phi);
  const double d1 = 1.0 + cg * ct;
  const double d2 = 1.0 - cg * ct;
  const double p1 = 0.5 * d1, p2 = 0.5 * d2;
  const double dp1 = -0.5 * st * cg;

  // d|eta v + c| / dx = (eta v + c) . (eta dv/dx) / |eta v + c|
  auto purity_derivs = [&ch](const BlochVec& v, const BlochVec& dv_dtheta, const BlochVec& dv_dphi) {
    const BlochVec out = ch.apply(v);
    const double r = out.norm();
    struct {
      double r, dtheta, dphi;
    } res{r, 0.0, 0.0};
    if (r > 0.0) {
      res.dtheta = out.dot(ch.eta * dv_dtheta) / r;
      res.dphi = out.dot(ch.eta * dv_dphi) / r;
    }
    return res;
  };

  Gradient g;
  double h1 = 0.0, h2 = 0.0;
  if (p1 >= kDegenerateOutcome) {
    const BlochVec s{sg * st * cp / d1, sg * st * sp / d1, (cg + ct) / d1};
    const double q = d1 * d1;
    const BlochVec ds_dtheta{sg * cp * (ct + cg) / q, sg * sp * (ct + cg) / q, -st * sg * sg / q};
    const BlochVec ds_dphi{-sg * st * sp / d1, sg * st * cp / d1, 0.0};
    const auto sd = purity_derivs(s, ds_dtheta, ds_dphi);
    h1 = mixedness(sd.r);
    const double w = p1 * log_ratio(sd.r);
    g.d_theta += w * sd.dtheta;
    g.d_phi += w * sd.dphi;
  }
  if (p2 >= kDegenerateOutcome) {
    const BlochVec t{-sg * st * cp / d2, -sg * st * sp / d2, (cg - ct) / d2};
    const double q = d2 * d2;
    const BlochVec dt_dtheta{-sg * cp * (ct - cg) / q, -sg * sp * (ct - cg) / q, st * sg * sg / q};
    const BlochVec dt_dphi{sg * st * sp / d2, -sg * st * cp / d2, 0.0};
    const auto td = purity_derivs(t, dt_dtheta, dt_dphi);
    h2 = mixedness(td.r);
    const double w = p2 * log_ratio(td.r);
    g.d_theta += w * td.dtheta;
    g.d_phi += w * td.dphi;
  }
  g.d_theta -= dp1 * (h1 - h2);
  return g;
}

double stationarity_norm(const AffineChannel& ch, double gamma, MeasurementAngles a) {
  const double st = std::abs(std::sin(a.theta));
  if (st < 1e-8) {
    const double g0 = grad_objective(ch, gamma, {a.theta, 0.0}).d_theta;
    const double g1 = grad_objective(ch, gamma, {a.theta, 0.5 * kPi}).d_theta;
    return std::hypot(g0, g1);
  }
  const Gradient g = grad_objective(ch, gamma, a);
  return std::hypot(g.d_theta, g.d_phi / st);
}

std::string to_string(SolutionClass c) {
  switch (c) {
    case SolutionClass::symmetric:
      return "symmetric";
    case SolutionClass::asymmetric:
      return "asymmetric";
    case SolutionClass::state_dependent:
      return "state_dependent";
  }
  return "unknown";
}

}  // namespace qdiscord
