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
#include <optional>

#include "qdiscord/discord.hpp"
#include "qdiscord/parallel.hpp"

namespace qdiscord {

namespace {

constexpr double kHalfPi = 0.5 * kPi;
constexpr double kNewtonTol = 1e-10;
constexpr int kNewtonMaxIter = 100;
constexpr int kMaxHalvings = 50;
constexpr double kMaxStep = 0.5;
constexpr double kJacobianStep = 1e-6;
constexpr double kClassTol = 1e-6;
constexpr double kMergeDistance = 1e-5;
constexpr double kFlatSpread = 1e-12;
constexpr double kTieTol = 1e-10;

struct Step {
  double d_theta, d_phi;
};

/// -pinv(H) g for a symmetric 2x2 H, dropping near-null directions.
Step newton_step(double h00, double h01, double h11, const Gradient& g) {
  const double mean = 0.5 * (h00 + h11);
  const double radius = std::hypot(0.5 * (h00 - h11), h01);
  const double l1 = mean + radius, l2 = mean - radius;
  const double psi = 0.5 * std::atan2(2.0 * h01, h00 - h11);
  const double v1[2] = {std::cos(psi), std::sin(psi)};
  const double v2[2] = {-std::sin(psi), std::cos(psi)};
  const double cutoff = 1e-9 * std::max(std::abs(l1), std::abs(l2));
  Step s{0.0, 0.0};
  for (const auto& [l, v] : {std::pair{l1, v1}, std::pair{l2, v2}}) {
    if (std::abs(l) <= cutoff || std::abs(l) < 1e-300) continue;
    const double coeff = -(v[0] * g.d_theta + v[1] * g.d_phi) / l;
    s.d_theta += coeff * v[0];
    s.d_phi += coeff * v[1];
  }
  const double len = std::hypot(s.d_theta, s.d_phi);
  if (len > kMaxStep) {
    s.d_theta *= kMaxStep / len;
    s.d_phi *= kMaxStep / len;
  }
  return s;
}

std::optional<MeasurementAngles> damped_newton(const AffineChannel& ch, double gamma, MeasurementAngles x) {
  Gradient g = grad_objective(ch, gamma, x);
  for (int it = 0; it < kNewtonMaxIter; ++it) {
    if (stationarity_norm(ch, gamma, x) < kNewtonTol) break;
    const double h = kJacobianStep;
    const Gradient tp = grad_objective(ch, gamma, {x.theta + h, x.phi});
    const Gradient tm = grad_objective(ch, gamma, {x.theta - h, x.phi});
    const Gradient pp = grad_objective(ch, gamma, {x.theta, x.phi + h});
    const Gradient pm = grad_objective(ch, gamma, {x.theta, x.phi - h});
    const double h00 = (tp.d_theta - tm.d_theta) / (2.0 * h);
    const double h11 = (pp.d_phi - pm.d_phi) / (2.0 * h);
    const double h01 = 0.5 * ((tp.d_phi - tm.d_phi) + (pp.d_theta - pm.d_theta)) / (2.0 * h);
    const Step step = newton_step(h00, h01, h11, g);

    bool accepted = false;
    double lambda = 1.0;
    for (int k = 0; k <= kMaxHalvings; ++k, lambda *= 0.5) {
      const MeasurementAngles y{x.theta + lambda * step.d_theta, x.phi + lambda * step.d_phi};
      const Gradient gy = grad_objective(ch, gamma, y);
      if (gy.norm() < g.norm()) {
        x = y;
        g = gy;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  if (stationarity_norm(ch, gamma, x) < kStationaryTol) return x;
  return std::nullopt;
}

bool flat_in_phi(const AffineChannel& ch, double gamma, double theta) {
  double lo = objective(ch, gamma, {theta, 0.0}), hi = lo;
  for (int k = 1; k < 8; ++k) {
    const double v = objective(ch, gamma, {theta, k * kPi / 4.0});
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo < kFlatSpread;
}

/// Folds, snaps onto the universal classes and collapses phi-rings to phi = 0.
std::optional<StationaryPoint> canonical_point(const AffineChannel& ch, double gamma, MeasurementAngles a) {
  a = fold_angles(a);
  SolutionClass cls = SolutionClass::state_dependent;
  if (a.theta < kClassTol) {
    a = {0.0, 0.0};
    cls = SolutionClass::asymmetric;
  } else if (std::abs(a.theta - kHalfPi) < kClassTol) {
    a = fold_angles({kHalfPi, a.phi});
    cls = SolutionClass::symmetric;
  }
  if (cls != SolutionClass::asymmetric && a.phi != 0.0 && flat_in_phi(ch, gamma, a.theta)) a.phi = 0.0;

  const double norm = stationarity_norm(ch, gamma, a);
  if (!(norm < kStationaryTol)) return std::nullopt;
  return StationaryPoint{a, objective(ch, gamma, a), norm, cls};
}

void merge_into(std::vector<StationaryPoint>& pts, const StationaryPoint& p) {
  for (const auto& q : pts)
    if (axis_distance(p.angles, q.angles) < kMergeDistance) return;
  pts.push_back(p);
}

/// Descending objective; among values within kTieTol of the best, the
/// smallest (theta, phi) is moved to the front.
void order_points(std::vector<StationaryPoint>& pts) {
  std::stable_sort(pts.begin(), pts.end(),
                   [](const StationaryPoint& l, const StationaryPoint& r) { return l.objective > r.objective; });
  if (pts.empty()) return;
  const double best = pts.front().objective;
  auto winner = pts.begin();
  for (auto it = pts.begin(); it != pts.end() && it->objective >= best - kTieTol; ++it) {
    if (it->angles.theta < winner->angles.theta ||
        (it->angles.theta == winner->angles.theta && it->angles.phi < winner->angles.phi))
      winner = it;
  }
  std::rotate(pts.begin(), winner, winner + 1);
}

}  // namespace

std::vector<StationaryPoint> universal_candidates(const AffineChannel& ch, double gamma) {
  std::vector<StationaryPoint> out;

  const MeasurementAngles pole{0.0, 0.0};
  const double pole_norm = stationarity_norm(ch, gamma, pole);
  if (pole_norm < kStationaryTol)
    out.push_back({pole, objective(ch, gamma, pole), pole_norm, SolutionClass::asymmetric});

  // Roots of dI'/dphi along the equator. The objective there has period pi.
  auto dphi = [&](double phi) { return grad_objective(ch, gamma, {kHalfPi, phi}).d_phi; };
  constexpr int kSamples = 180;
  std::vector<double> g(kSamples + 1);
  double gmax = 0.0;
  for (int k = 0; k <= kSamples; ++k) {
    g[k] = dphi(k * kPi / kSamples);
    gmax = std::max(gmax, std::abs(g[k]));
  }
  std::vector<double> roots;
  if (gmax < 1e-12) {
    roots.push_back(0.0);
  } else {
    const double zero_tol = 1e-13;
    for (int k = 0; k < kSamples; ++k) {
      const double a = k * kPi / kSamples, b = (k + 1) * kPi / kSamples;
      if (std::abs(g[k]) < zero_tol) {
        roots.push_back(a);
        continue;
      }
      if (std::abs(g[k + 1]) < zero_tol || (g[k] > 0.0) == (g[k + 1] > 0.0)) continue;
      double lo = a, hi = b, glo = g[k];
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = dphi(mid);
        if ((gm > 0.0) == (glo > 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
  }
  for (double phi : roots) {
    const MeasurementAngles a = fold_angles({kHalfPi, phi});
    const double norm = stationarity_norm(ch, gamma, a);
    if (norm < kStationaryTol) merge_into(out, {a, objective(ch, gamma, a), norm, SolutionClass::symmetric});
  }
  return out;
}

std::vector<StationaryPoint> find_stationary_points(const AffineChannel& ch, double gamma,
                                                    const SolverOptions& opts) {
  const int nt = std::max(opts.n_theta, 1);
  const int np = std::max(opts.n_phi, 1);
  std::vector<MeasurementAngles> starts;
  starts.reserve(static_cast<std::size_t>(nt) * np);
  for (int i = 0; i < nt; ++i)
    for (int j = 0; j < np; ++j) starts.push_back({(i + 0.5) * kHalfPi / nt, 2.0 * kPi * j / np});

  double lo = objective(ch, gamma, {0.0, 0.0}), hi = lo;
  for (const auto& s : starts) {
    const double v = objective(ch, gamma, s);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi - lo < kFlatSpread) {
    const MeasurementAngles canon{kHalfPi, 0.0};
    return {{canon, objective(ch, gamma, canon), stationarity_norm(ch, gamma, canon), SolutionClass::symmetric}};
  }

  std::vector<std::optional<MeasurementAngles>> roots(starts.size());
  parallel_for(starts.size(), opts.threads, [&](std::size_t i) { roots[i] = damped_newton(ch, gamma, starts[i]); });

  std::vector<StationaryPoint> pts;
  for (const auto& u : universal_candidates(ch, gamma)) merge_into(pts, u);
  for (const auto& r : roots) {
    if (!r) continue;
    if (auto p = canonical_point(ch, gamma, *r)) merge_into(pts, *p);
  }
  order_points(pts);
  return pts;
}

}  // namespace qdiscord
