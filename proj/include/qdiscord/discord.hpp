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

// Classical correlation and discord of two-qubit states, with projective
// measurements on subsystem b.
//
// Two independent evaluation paths are provided:
//   * the channel path works on the affine channel and Schmidt angle from a
//     CJDecomposition, in the channel frame (see bloch.hpp);
//   * the direct path projects the 4x4 state with
//       |psi_1> = cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>
//       |psi_2> = -sin(theta/2)|0> + cos(theta/2) e^{i phi}|1>
//     in the original b-basis and never touches the decomposition.
// to_original_frame / to_channel_frame convert between the two angle systems.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdiscord/bloch.hpp"
#include "qdiscord/choi.hpp"
#include "qdiscord/qmat.hpp"

namespace qdiscord {

inline constexpr double kPi = 3.14159265358979323846;

struct MeasurementAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Wraps into theta in [0, pi], phi in [0, 2 pi) without changing the
/// measurement axis.
MeasurementAngles normalize_angles(MeasurementAngles a);

/// Canonical representative of the projective measurement {Pi_1, Pi_2}:
/// theta in [0, pi/2] (using (theta, phi) ~ (pi - theta, phi + pi)), phi = 0
/// at the pole and phi in [0, pi) on the equator.
MeasurementAngles fold_angles(MeasurementAngles a);

/// Bloch direction (sin t cos p, sin t sin p, cos t).
BlochVec axis_of(MeasurementAngles a);
MeasurementAngles angles_of(const BlochVec& axis);

/// Angle between measurement axes, treating n and -n as the same measurement.
double axis_distance(MeasurementAngles a, MeasurementAngles b);

/// Channel-frame angles -> direct-path angles in the original b-basis.
MeasurementAngles to_original_frame(const CMat2& basis_rotation, MeasurementAngles channel);
MeasurementAngles to_channel_frame(const CMat2& basis_rotation, MeasurementAngles original);

// ---- channel path -------------------------------------------------------

/// S(rho^a) recovered from the channel: rho^a = E(diag(cos^2, sin^2)).
double channel_marginal_entropy(const AffineChannel& ch, double gamma);

/// p1 H2((1 + s')/2) + p2 H2((1 + t')/2).
double conditional_entropy_channel(const AffineChannel& ch, double gamma, MeasurementAngles a);

/// I'(theta, phi) = S(rho^a) - conditional entropy.
double objective(const AffineChannel& ch, double gamma, MeasurementAngles a);

struct Gradient {
  double d_theta = 0.0;
  double d_phi = 0.0;

  double norm() const;
};

/// Purities above this are clamped before entering log((1+x)/(1-x)).
inline constexpr double kPurityClamp = 1.0 - 1e-12;

/// Analytic (dI'/dtheta, dI'/dphi).
Gradient grad_objective(const AffineChannel& ch, double gamma, MeasurementAngles a);

/// Gradient norm on the sphere: hypot(dI'/dtheta, dI'/dphi / sin(theta)).
/// At a pole it is the largest directional derivative away from it.
double stationarity_norm(const AffineChannel& ch, double gamma, MeasurementAngles a);

enum class SolutionClass { symmetric, asymmetric, state_dependent };

std::string to_string(SolutionClass c);

struct StationaryPoint {
  MeasurementAngles angles;
  double objective = 0.0;
  double grad_norm = 0.0;
  SolutionClass cls = SolutionClass::state_dependent;
};

inline constexpr double kStationaryTol = 1e-7;

/// theta = 0 and every theta = pi/2 root of dI'/dphi, kept only when they
/// pass the stationarity check.
std::vector<StationaryPoint> universal_candidates(const AffineChannel& ch, double gamma);

struct SolverOptions {
  int n_theta = 24;  // multistart rows over theta in (0, pi/2)
  int n_phi = 48;    // multistart columns over phi in [0, 2 pi)
  int threads = 1;
};

/// Universal candidates plus every root reached by damped Newton from the
/// multistart grid, merged and sorted by descending objective. A flat
/// objective yields the single canonical point (pi/2, 0). Angles are in the
/// channel frame and folded.
std::vector<StationaryPoint> find_stationary_points(const AffineChannel& ch, double gamma,
                                                    const SolverOptions& opts = {});

// ---- direct path --------------------------------------------------------

double mutual_information(const DensityMatrix4& rho);

/// sum_j p_j S(rho_j) for the projective measurement at `a` (original basis).
double conditional_entropy_direct(const DensityMatrix4& rho, MeasurementAngles a);

struct OracleResult {
  double classical_corr = 0.0;
  double cond_entropy = 0.0;
  MeasurementAngles best;  // folded, original basis
};

/// Brute-force maximization of S(rho^a) - conditional_entropy_direct over a
/// theta x phi grid followed by alternating golden-section refinement.
OracleResult grid_oracle(const DensityMatrix4& rho, int n_theta = 64, int n_phi = 128, int threads = 1);

// ---- assembly -----------------------------------------------------------

enum class Method { stationary, oracle, xstate_analytic };

std::string to_string(Method m);

struct DiscordOptions {
  Method method = Method::stationary;
  bool verify = false;            // cross-check against the grid oracle
  bool allow_fallback = false;    // xstate_analytic -> stationary when not applicable
  int oracle_theta = 64;
  int oracle_phi = 128;
  SolverOptions solver;
};

struct DiscordReport {
  double mutual_info = 0.0;
  double classical_corr = 0.0;
  double discord = 0.0;
  MeasurementAngles optimal;                    // folded, original basis
  std::vector<StationaryPoint> stationary_points;  // original basis
  Method method = Method::stationary;
  bool singular_marginal = false;
  bool fell_back = false;
  std::optional<double> oracle_delta;           // Q - Q_oracle, when verified
};

DiscordReport discord(const DensityMatrix4& rho, const DiscordOptions& opts = {});

}  // namespace qdiscord
