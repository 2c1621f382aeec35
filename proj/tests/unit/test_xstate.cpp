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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "qdiscord/bloch.hpp"
#include "qdiscord/choi.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/states.hpp"
#include "qdiscord/xstate.hpp"

using namespace qdiscord;

namespace {

AffineChannel channel_of(const DensityMatrix4& rho) { return affine_from_kraus(decompose(rho).kraus); }

// Sign pattern of successive differences of H over (lo, hi).
struct Monotonicity {
  bool increasing = true;
  bool decreasing = true;
};

Monotonicity scan_h(double k, double lo, double hi, int n = 20000) {
  Monotonicity m;
  double prev = H_func(lo, k);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double h = H_func(x, k);
    if (h < prev) m.increasing = false;
    if (h > prev) m.decreasing = false;
    prev = h;
  }
  return m;
}

}  // namespace

TEST_CASE("X pattern") {
  CHECK(is_x_state(counterexample_state()));
  CHECK(is_x_state(werner(1.0)));
  CHECK(is_x_state(bell_diagonal(0.2, 0.3, -0.1)));
  CMat4 m = counterexample_state().matrix();
  m(0, 1) = 0.01;
  m(1, 0) = 0.01;
  CHECK(!is_x_state(DensityMatrix4::from_matrix(m)));
  CHECK(!is_x_state(random_state(2, 4)));
}

TEST_CASE("maximum of f over the azimuth") {
  SUBCASE("isotropic") {
    AffineChannel ch;
    ch.eta[0][0] = 0.5;
    ch.eta[1][1] = 0.5;
    const FMaximum f = maximize_f(ch);
    CHECK(f.eta_perp_sq == doctest::Approx(0.25));
    CHECK(f.phi_star == 0.0);
  }
  SUBCASE("dense sweep") {
    for (const DensityMatrix4& rho : {counterexample_state(), x_state(0.3, 0.2, 0.1, 0.4, cplx(0.1, 0.15), cplx(-0.05, 0.1))}) {
      const AffineChannel ch = channel_of(rho);
      double best = 0.0;
      for (int i = 0; i < 10000; ++i) best = std::max(best, f_phi(ch, kPi * i / 10000.0));
      const FMaximum f = maximize_f(ch);
      CHECK(std::abs(f.eta_perp_sq - best) < 1e-8);
      CHECK(f.eta_perp_sq >= best - 1e-15);
      CHECK(std::abs(f_phi(ch, f.phi_star) - f.eta_perp_sq) < 1e-12);
    }
  }
  SUBCASE("non-X channel") { CHECK_THROWS_AS(maximize_f(channel_of(random_state(5, 4))), NotApplicable); }
}

TEST_CASE("parameters and closed forms") {
  const DensityMatrix4 rho = x_state(0.35, 0.15, 0.15, 0.35, cplx(0.2, 0.0), cplx(0.05, 0.0));
  const CJDecomposition d = decompose(rho);
  REQUIRE(std::abs(d.gamma - kPi / 2) < 1e-12);
  const AffineChannel ch = affine_from_kraus(d.kraus);
  const XStateParams p = x_state_params(ch);
  CHECK(p.a == doctest::Approx(p.eta_perp * p.eta_perp + p.c_z * p.c_z));
  CHECK(p.b == doctest::Approx(p.eta_zz * p.c_z));
  CHECK(p.c == doctest::Approx(p.eta_zz * p.eta_zz - p.eta_perp * p.eta_perp));
  for (double th : {0.0, 0.3, 1.0, kPi / 2, 2.5}) {
    const auto cp = conditional_purities(ch, d.gamma, th, p.phi_star);
    CHECK(closed_form_s(p, th) == doctest::Approx(cp.s_prime).epsilon(1e-12));
    CHECK(closed_form_t(p, th) == doctest::Approx(cp.t_prime).epsilon(1e-12));
  }
}

TEST_CASE("universal sufficiency") {
  XStateParams p;
  p.k_defined = true;
  p.k = -0.5;
  CHECK(universal_sufficient(p));
  p.k = -0.8;
  CHECK(!universal_sufficient(p));
  p.k = -1.0;
  CHECK(universal_sufficient(p));
  p.k = -2.0 / 3.0;
  CHECK(universal_sufficient(p));
  p.k_defined = false;
  CHECK(universal_sufficient(p));

  const AffineChannel bd = channel_of(bell_diagonal(0.4, -0.2, 0.3));
  const XStateParams q = x_state_params(bd);
  REQUIRE(q.k_defined);
  CHECK(q.k == doctest::Approx(-1.0 / (q.eta_perp * q.eta_perp)));
  CHECK(q.k <= -1.0);
  CHECK(universal_sufficient(q));
}

TEST_CASE("H monotonicity") {
  for (double k : {-0.5, -0.2, 0.0, 0.7, 3.0}) CHECK(scan_h(k, 1e-3, 1.0 - 1e-9).increasing);
  CHECK(scan_h(-2.0 / 3.0, 1e-3, 1.0 - 1e-9).increasing);
  for (double k : {-1.0, -1.5, -4.0}) CHECK(scan_h(k, 1e-3, std::min(1.0, 1.0 / std::sqrt(-k)) - 1e-9).decreasing);
  const Monotonicity gap = scan_h(-0.8, 1e-3, 1.0 - 1e-9);
  CHECK(!gap.increasing);
  CHECK(!gap.decreasing);

  CHECK(H_func(0.5, 0.0) == doctest::Approx(2.0 * std::log(3.0)));
  CHECK(G_func(0.5, 0.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(H_func(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(H_func(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(H_func(0.9, -2.0), DomainError);
}

TEST_CASE("analytic classical correlation") {
  SUBCASE("Bell-diagonal") {
    Rng rng(77);
    int done = 0;
    while (done < 30) {
      const double x = 2 * rng.uniform() - 1, y = 2 * rng.uniform() - 1, z = 2 * rng.uniform() - 1;
      if (1 - x - y - z < 0 || 1 - x + y + z < 0 || 1 + x - y + z < 0 || 1 + x + y - z < 0) continue;
      const DensityMatrix4 rho = bell_diagonal(x, y, z);
      const double eta_opt = std::max({std::abs(x), std::abs(y), std::abs(z)});
      const DiscordReport r = analytic_discord_x(rho);
      CHECK(r.classical_corr == doctest::Approx(1 - oracle::h2((1 + eta_opt) / 2)).epsilon(1e-12));
      CHECK(r.method == Method::xstate_analytic);
      CHECK(std::abs(r.classical_corr - grid_oracle(rho).classical_corr) < 1e-8);
      ++done;
    }
  }
  SUBCASE("not applicable") {
    CHECK_THROWS_AS(analytic_discord_x(counterexample_state()), NotApplicable);
    CHECK_THROWS_AS(analytic_discord_x(random_state(3, 4)), NotApplicable);
  }
}
