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

#include "qdiscord/bloch.hpp"

#include <sstream>

namespace qdiscord {

BlochVec operator*(const Mat3& m, const BlochVec& v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

BlochVec to_bloch(const CMat2& rho) {
  return {(rho * pauli::x()).trace().real(), (rho * pauli::y()).trace().real(),
          (rho * pauli::z()).trace().real()};
}

CMat2 from_bloch(const BlochVec& r) {
  CMat2 m;
  m(0, 0) = 0.5 * (1.0 + r.z);
  m(1, 1) = 0.5 * (1.0 - r.z);
  m(0, 1) = cplx(0.5 * r.x, -0.5 * r.y);
  m(1, 0) = cplx(0.5 * r.x, 0.5 * r.y);
  return m;
}

AffineChannel affine_from_kraus(const KrausSet& k) {
  const std::array<CMat2, 3> sigma{pauli::x(), pauli::y(), pauli::z()};
  AffineChannel ch;
  for (std::size_t i = 0; i < 3; ++i) {
    const CMat2 image = apply_channel(k, sigma[i]);
    for (std::size_t j = 0; j < 3; ++j) ch.eta[j][i] = 0.5 * (sigma[j] * image).trace().real();
  }
  const CMat2 image_id = apply_channel(k, CMat2::identity());
  ch.c = {0.5 * (sigma[0] * image_id).trace().real(), 0.5 * (sigma[1] * image_id).trace().real(),
          0.5 * (sigma[2] * image_id).trace().real()};
  return ch;
}

OutcomeProbabilities conditional_probabilities(double gamma, double theta) {
  const double p1 = 0.5 * (1.0 + std::cos(theta) * std::cos(gamma));
  return {p1, 0.5 * (1.0 - std::cos(theta) * std::cos(gamma))};
}

ConditionalBloch conditional_bloch_in(double gamma, double theta, double phi) {
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  const double d1 = 1.0 + cg * ct;
  const double d2 = 1.0 - cg * ct;
  if (0.5 * d1 < kDegenerateOutcome || 0.5 * d2 < kDegenerateOutcome) {
    std::ostringstream msg;
    msg << "measurement outcome with vanishing probability (gamma=" << gamma << ", theta=" << theta << ")";
    throw DegenerateOutcome(msg.str());
  }
  ConditionalBloch out;
  out.s = {sg * st * cp / d1, sg * st * sp / d1, (cg + ct) / d1};
  out.t = {-sg * st * cp / d2, -sg * st * sp / d2, (cg - ct) / d2};
  return out;
}

ConditionalPurities conditional_purities(const AffineChannel& ch, double gamma, double theta, double phi) {
  const auto [p1, p2] = conditional_probabilities(gamma, theta);
  const ConditionalBloch in = conditional_bloch_in(gamma, theta, phi);
  return {ch.apply(in.s).norm(), ch.apply(in.t).norm(), p1, p2};
}

}  // namespace qdiscord
