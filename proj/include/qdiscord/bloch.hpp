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

// Bloch-ball picture of a qubit channel and of the states steered onto
// subsystem a by a projective measurement on b.
//
// Measurement angles here live in the channel frame: the b-basis in which the
// marginal is diag(cos^2(gamma/2), sin^2(gamma/2)), with the azimuth measured
// in the complex-conjugate sense that the channel-state duality induces. The
// discord module converts to and from ordinary measurement angles.

#pragma once

#include <array>
#include <cmath>

#include "qdiscord/choi.hpp"
#include "qdiscord/qmat.hpp"

namespace qdiscord {

struct BlochVec {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double dot(const BlochVec& o) const { return x * o.x + y * o.y + z * o.z; }

  friend BlochVec operator+(const BlochVec& l, const BlochVec& r) { return {l.x + r.x, l.y + r.y, l.z + r.z}; }
  friend BlochVec operator-(const BlochVec& l, const BlochVec& r) { return {l.x - r.x, l.y - r.y, l.z - r.z}; }
  friend BlochVec operator*(double s, const BlochVec& v) { return {s * v.x, s * v.y, s * v.z}; }
};

using Mat3 = std::array<std::array<double, 3>, 3>;

BlochVec operator*(const Mat3& m, const BlochVec& v);

/// r -> eta r + c. Row index of eta is the output component.
struct AffineChannel {
  Mat3 eta{};
  BlochVec c;

  BlochVec apply(const BlochVec& r) const { return eta * r + c; }
};

/// r_k = Tr(rho sigma_k)
BlochVec to_bloch(const CMat2& rho);

/// (I + r . sigma) / 2
CMat2 from_bloch(const BlochVec& r);

/// eta(j, i) = Tr[sigma_j E(sigma_i)] / 2,  c_k = Tr[sigma_k E(I)] / 2.
AffineChannel affine_from_kraus(const KrausSet& k);

struct OutcomeProbabilities {
  double p1 = 0.0;
  double p2 = 0.0;
};

/// p1 = (1 + cos(theta) cos(gamma)) / 2, p2 = 1 - p1.
OutcomeProbabilities conditional_probabilities(double gamma, double theta);

struct ConditionalBloch {
  BlochVec s;  // outcome 1
  BlochVec t;  // outcome 2
};

/// Probabilities below this mark an outcome that never occurs.
inline constexpr double kDegenerateOutcome = 1e-14;

/// Bloch vectors of the pure states |phi_1>, |phi_2> that the two outcomes
/// prepare on the channel input. Throws DegenerateOutcome if either outcome
/// has probability below kDegenerateOutcome.
ConditionalBloch conditional_bloch_in(double gamma, double theta, double phi);

struct ConditionalPurities {
  double s_prime = 0.0;  // |eta s + c|
  double t_prime = 0.0;  // |eta t + c|
  double p1 = 0.0;
  double p2 = 0.0;
};

ConditionalPurities conditional_purities(const AffineChannel& ch, double gamma, double theta, double phi);

}  // namespace qdiscord
