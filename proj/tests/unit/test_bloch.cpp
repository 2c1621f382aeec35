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

#include <cmath>

#include "oracles.hpp"
#include "qdiscord/bloch.hpp"
#include "qdiscord/choi.hpp"
#include "qdiscord/errors.hpp"
#include "qdiscord/states.hpp"

using namespace qdiscord;

namespace {

constexpr double kPiD = 3.14159265358979323846;

void check_vec(const BlochVec& v, double x, double y, double z, double tol = 1e-14) {
  CHECK(std::abs(v.x - x) <= tol);
  CHECK(std::abs(v.y - y) <= tol);
  CHECK(std::abs(v.z - z) <= tol);
}

}  // namespace

TEST_CASE("Bloch vectors") {
  check_vec(to_bloch(0.5 * CMat2::identity()), 0, 0, 0);
  check_vec(to_bloch(CMat2::diagonal({1, 0})), 0, 0, 1);
  const CVec2 plus{M_SQRT1_2, M_SQRT1_2};
  check_vec(to_bloch(outer(plus, plus)), 1, 0, 0, 1e-15);
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const CMat2 rb = partial_trace_a(random_state(rng, 4));
    const Eigen::Vector3d ref = oracle::bloch(oracle::to_eigen(rb));
    const BlochVec r = to_bloch(rb);
    check_vec(r, ref(0), ref(1), ref(2), 1e-14);
    CHECK(frobenius_norm(from_bloch(r) - rb) < 1e-14);
  }
}

TEST_CASE("affine form of reference channels") {
  const AffineChannel id = affine_from_kraus(KrausSet{{CMat2::identity()}});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(id.eta[i][j] - (i == j ? 1.0 : 0.0)) < 1e-15);
  check_vec(id.c, 0, 0, 0);

  const AffineChannel dep = affine_from_kraus(decompose(werner(0.0)).kraus);
  for (const auto& row : dep.eta)
    for (double v : row) CHECK(std::abs(v) < 1e-12);
  check_vec(dep.c, 0, 0, 0, 1e-12);
}

TEST_CASE("affine map agrees with the Kraus action") {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const CJDecomposition d = decompose(random_state(rng, 1 + i % 4));
    const AffineChannel ch = affine_from_kraus(d.kraus);
    const BlochVec r{rng.normal() * 0.3, rng.normal() * 0.3, rng.normal() * 0.3};
    const BlochVec via_kraus = to_bloch(apply_channel(d.kraus, from_bloch(r)));
    const BlochVec via_affine = ch.apply(r);
    CHECK((via_kraus - via_affine).norm() < 1e-12);
  }
}

TEST_CASE("X-state channels have block form") {
  const AffineChannel ch = affine_from_kraus(decompose(counterexample_state()).kraus);
  CHECK(std::abs(ch.eta[0][2]) < 1e-12);
  CHECK(std::abs(ch.eta[1][2]) < 1e-12);
  CHECK(std::abs(ch.eta[2][0]) < 1e-12);
  CHECK(std::abs(ch.eta[2][1]) < 1e-12);
  CHECK(std::abs(ch.c.x) < 1e-12);
  CHECK(std::abs(ch.c.y) < 1e-12);
}

TEST_CASE("conditional probabilities") {
  for (double g : {0.1, 0.7, 1.3}) {
    const auto p = conditional_probabilities(g, kPiD / 2);
    CHECK(p.p1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.p2 == doctest::Approx(0.5).epsilon(1e-15));
  }
  for (double th : {0.0, 0.4, 2.0}) {
    const auto p = conditional_probabilities(kPiD / 2, th);
    CHECK(p.p1 == doctest::Approx(0.5).epsilon(1e-15));
  }
  const auto lim = conditional_probabilities(1e-9, 0.0);
  CHECK(lim.p1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lim.p2 < 1e-15);
}

TEST_CASE("conditional Bloch vectors") {
  const auto e = conditional_bloch_in(kPiD / 2, kPiD / 2, 0.0);
  check_vec(e.s, 1, 0, 0, 1e-15);
  check_vec(e.t, -1, 0, 0, 1e-15);
  for (double g : {0.3, 0.9, 1.4}) {
    const auto p = conditional_bloch_in(g, 0.0, 0.0);
    check_vec(p.s, 0, 0, 1, 1e-14);
    check_vec(p.t, 0, 0, -1, 1e-14);
  }
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const double g = 0.05 + 1.5 * rng.uniform();
    const auto cb = conditional_bloch_in(g, kPiD * rng.uniform(), 2 * kPiD * rng.uniform());
    CHECK(cb.s.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cb.t.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(conditional_bloch_in(0.0, 0.0, 0.0), DegenerateOutcome);
}

TEST_CASE("conditional purities") {
  AffineChannel id;
  for (int i = 0; i < 3; ++i) id.eta[i][i] = 1.0;
  const AffineChannel zero;
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const double g = 0.05 + 1.5 * rng.uniform();
    const double th = kPiD * rng.uniform();
    const double ph = 2 * kPiD * rng.uniform();
    const auto a = conditional_purities(id, g, th, ph);
    CHECK(a.s_prime == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.t_prime == doctest::Approx(1.0).epsilon(1e-12));
    const auto b = conditional_purities(zero, g, th, ph);
    CHECK(b.s_prime == 0.0);
    CHECK(b.t_prime == 0.0);
  }
}

TEST_CASE("purity symmetry under antipodal measurement") {
  Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    const CJDecomposition d = decompose(random_state(rng, 4));
    const AffineChannel ch = affine_from_kraus(d.kraus);
    const double th = 0.01 + (kPiD - 0.02) * rng.uniform();
    const double ph = 2 * kPiD * rng.uniform();
    const auto a = conditional_purities(ch, d.gamma, th, ph);
    const auto b = conditional_purities(ch, d.gamma, kPiD - th, ph + kPiD);
    CHECK(a.s_prime == doctest::Approx(b.t_prime).epsilon(1e-12));
    CHECK(a.t_prime == doctest::Approx(b.s_prime).epsilon(1e-12));
    CHECK(a.p1 == doctest::Approx(b.p2).epsilon(1e-12));
  }
}
