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
#include <numeric>

#include "qdiscord/discord.hpp"
#include "qdiscord/parallel.hpp"

namespace qdiscord {

namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr int kGoldenIters = 40;
constexpr int kRefineRounds = 60;
constexpr int kRefineStarts = 4;

/// Golden-section minimization of f on [lo, hi]; returns the best evaluated
/// abscissa and value.
template <typename F>
std::pair<double, double> golden_min(F&& f, double lo, double hi) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < kGoldenIters; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace

double mutual_information(const DensityMatrix4& rho) {
  return von_neumann_entropy(partial_trace_b(rho)) + von_neumann_entropy(partial_trace_a(rho)) -
         von_neumann_entropy(rho.matrix());
}

double conditional_entropy_direct(const DensityMatrix4& rho, MeasurementAngles a) {
  const double c = std::cos(0.5 * a.theta), s = std::sin(0.5 * a.theta);
  const cplx e = std::polar(1.0, a.phi);
  const std::array<CVec2, 2> psi{CVec2{c, s * e}, CVec2{-s, c * e}};
  const CMat4& m = rho.matrix();

  double h = 0.0;
  for (const auto& v : psi) {
    // <psi|_b rho |psi>_b, an unnormalized operator on a.
    CMat2 cond;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) {
        cplx acc = 0.0;
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t bp = 0; bp < 2; ++bp) acc += std::conj(v[b]) * m(2 * i + b, 2 * k + bp) * v[bp];
        cond(i, k) = acc;
      }
    const double p = cond.trace().real();
    if (p < kDegenerateOutcome) continue;
    h += p * von_neumann_entropy(cond * (1.0 / p));
  }
  return h;
}

OracleResult grid_oracle(const DensityMatrix4& rho, int n_theta, int n_phi, int threads) {
  if (n_theta < 2 || n_phi < 1) throw DomainError("grid_oracle: need n_theta >= 2 and n_phi >= 1");
  const std::size_t nt = static_cast<std::size_t>(n_theta);
  const std::size_t np = static_cast<std::size_t>(n_phi);
  const double dtheta = kPi / (n_theta - 1);
  const double dphi = 2.0 * kPi / n_phi;

  auto eval = [&rho](double theta, double phi) {
    return conditional_entropy_direct(rho, normalize_angles({theta, phi}));
  };

  std::vector<double> grid(nt * np);
  parallel_for(nt, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < np; ++j) grid[i * np + j] = eval(i * dtheta, j * dphi);
  });

  std::vector<std::size_t> idx(grid.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  const std::size_t k = std::min<std::size_t>(kRefineStarts, idx.size());
  std::partial_sort(idx.begin(), idx.begin() + k, idx.end(),
                    [&grid](std::size_t l, std::size_t r) { return grid[l] < grid[r] || (grid[l] == grid[r] && l < r); });

  struct Candidate {
    MeasurementAngles at;
    double value;
  };
  std::vector<Candidate> refined(k);
  parallel_for(k, threads, [&](std::size_t c) {
    const std::size_t g = idx[c];
    MeasurementAngles cur{(g / np) * dtheta, (g % np) * dphi};
    double best = grid[g];
    for (int round = 0; round < kRefineRounds; ++round) {
      const double before = best;
      const auto [t, ft] = golden_min([&](double x) { return eval(x, cur.phi); }, cur.theta - dtheta, cur.theta + dtheta);
      if (ft < best) {
        cur.theta = t;
        best = ft;
      }
      const auto [p, fp] = golden_min([&](double x) { return eval(cur.theta, x); }, cur.phi - dphi, cur.phi + dphi);
      if (fp < best) {
        cur.phi = p;
        best = fp;
      }
      if (before - best < 1e-16) break;
    }
    refined[c] = {fold_angles(cur), best};
  });

  // Lowest conditional entropy; near-ties resolved by the smaller (theta, phi).
  Candidate win = refined.front();
  for (const auto& c : refined) {
    if (c.value < win.value - 1e-10) {
      win = c;
    } else if (std::abs(c.value - win.value) <= 1e-10 &&
               (c.at.theta < win.at.theta || (c.at.theta == win.at.theta && c.at.phi < win.at.phi))) {
      win = {c.at, std::min(c.value, win.value)};
    }
  }
  const double s_a = von_neumann_entropy(partial_trace_b(rho));
  return {s_a - win.value, win.value, win.at};
}

}  // namespace qdiscord
