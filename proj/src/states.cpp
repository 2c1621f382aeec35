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

#include <charconv>
#include <cmath>
#include <sstream>

#include "qdiscord/states.hpp"

namespace qdiscord {

double Rng::uniform() {
  // 53 high bits, shifted off zero so log() below stays finite.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double angle = 2.0 * 3.14159265358979323846 * uniform();
  spare_ = r * std::sin(angle);
  return r * std::cos(angle);
}

CMat2 random_unitary2(Rng& rng) {
  CVec2 c0{rng.complex_normal(), rng.complex_normal()};
  CVec2 c1{rng.complex_normal(), rng.complex_normal()};
  const double n0 = norm(c0);
  for (auto& x : c0) x /= n0;
  const cplx proj = inner(c0, c1);
  for (std::size_t i = 0; i < 2; ++i) c1[i] -= proj * c0[i];
  const double n1 = norm(c1);
  for (auto& x : c1) x /= n1;
  CMat2 u;
  for (std::size_t i = 0; i < 2; ++i) {
    u(i, 0) = c0[i];
    u(i, 1) = c1[i];
  }
  return u;
}

namespace {

CMat4 counterexample_matrix(double rho44) {
  CMat4 m;
  for (std::size_t i = 0; i < 3; ++i) m(i, i) = kCounterexampleDiagonal[i];
  m(3, 3) = rho44;
  m(1, 2) = kCounterexampleCoherence;
  m(2, 1) = kCounterexampleCoherence;
  return m;
}

}  // namespace

DensityMatrix4 counterexample_state() { return DensityMatrix4::from_matrix(counterexample_matrix(kCounterexampleCorrectedRho44)); }

DensityMatrix4 counterexample_state_printed() {
  const CMat4 m = counterexample_matrix(kCounterexampleDiagonal[3]);
  return DensityMatrix4::from_matrix(m * (1.0 / m.trace().real()));
}

DensityMatrix4 bell_diagonal(double eta_x, double eta_y, double eta_z) {
  const double weights[4] = {1.0 - eta_x - eta_y - eta_z, 1.0 - eta_x + eta_y + eta_z, 1.0 + eta_x - eta_y + eta_z,
                             1.0 + eta_x + eta_y - eta_z};
  for (double w : weights) {
    if (!(w >= -1e-12)) {
      std::ostringstream msg;
      msg << "bell-diagonal parameters (" << eta_x << ", " << eta_y << ", " << eta_z
          << ") lie outside the physical tetrahedron";
      throw InvalidState(msg.str());
    }
  }
  CMat4 m = CMat4::identity();
  m += eta_x * tensor(pauli::x(), pauli::x());
  m += eta_y * tensor(pauli::y(), pauli::y());
  m += eta_z * tensor(pauli::z(), pauli::z());
  return DensityMatrix4::from_matrix(0.25 * m);
}

DensityMatrix4 werner(double p) {
  if (!(p >= -1.0 / 3.0 - 1e-12 && p <= 1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "werner parameter " << p << " outside [-1/3, 1]";
    throw InvalidState(msg.str());
  }
  const CVec4 phi_plus{M_SQRT1_2, 0.0, 0.0, M_SQRT1_2};
  return DensityMatrix4::from_matrix(p * outer(phi_plus, phi_plus) + (1.0 - p) * 0.25 * CMat4::identity());
}

DensityMatrix4 x_state(double r11, double r22, double r33, double r44, cplx r14, cplx r23) {
  CMat4 m;
  m(0, 0) = r11;
  m(1, 1) = r22;
  m(2, 2) = r33;
  m(3, 3) = r44;
  m(0, 3) = r14;
  m(3, 0) = std::conj(r14);
  m(1, 2) = r23;
  m(2, 1) = std::conj(r23);
  return DensityMatrix4::from_matrix(m);
}

DensityMatrix4 random_state(Rng& rng, int rank) {
  if (rank < 1 || rank > 4) throw DomainError("random_state: rank must be in 1..4");
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::array<CVec4, 4> cols{};
    for (int r = 0; r < rank; ++r)
      for (auto& x : cols[r]) x = rng.complex_normal();
    CMat4 m;
    for (int r = 0; r < rank; ++r) m += outer(cols[r], cols[r]);
    m = m * (1.0 / m.trace().real());
    if (qubit_eigenvalues(partial_trace_a(m))[1] < 1e-6) continue;
    return DensityMatrix4::from_matrix(m);
  }
  throw InvalidState("random_state: b-marginal stayed singular after 10 draws");
}

DensityMatrix4 random_state(std::uint64_t seed, int rank) {
  Rng rng(seed);
  return random_state(rng, rank);
}

DensityMatrix4 normalize_trace(const CMat4& m, double& original_trace, double tol) {
  original_trace = m.trace().real();
  if (!(std::abs(original_trace - 1.0) <= tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "trace " << original_trace << " is too far from 1 to renormalize";
    throw InvalidState(msg.str());
  }
  if (std::abs(original_trace - 1.0) < DensityMatrix4::kTraceTol) return DensityMatrix4::from_matrix(m);
  return DensityMatrix4::from_matrix(m * (1.0 / original_trace));
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw InvalidState("bad " + std::string(what) + " parameter '" + std::string(s) + "'");
  return v;
}

cplx parse_coherence(std::string_view s) {
  if (s.find('j') == std::string_view::npos) return parse_real(s, "x-state");
  if (auto z = parse_complex_token(s)) return *z;
  throw InvalidState("bad x-state coherence '" + std::string(s) + "'");
}

void expect_count(const std::vector<std::string_view>& params, std::size_t lo, std::size_t hi, std::string_view family) {
  if (params.size() < lo || params.size() > hi) {
    std::ostringstream msg;
    msg << "family '" << family << "' takes " << lo;
    if (hi != lo) msg << ".." << hi;
    msg << " parameter(s), got " << params.size();
    throw InvalidState(msg.str());
  }
}

}  // namespace

ResolvedState resolve_named_state(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  std::vector<std::string_view> params;
  if (colon != std::string_view::npos) params = split(spec.substr(colon + 1), ',');

  const std::string label(spec);
  if (family == "lu" || family == "counterexample") {
    expect_count(params, 0, 1, family);
    if (params.empty()) return {counterexample_state(), label, {"rho_44 = 0.6717 (printed 0.6170) for unit trace"}};
    if (params[0] != "printed") throw InvalidState("lu: unknown variant '" + std::string(params[0]) + "'");
    std::ostringstream note;
    note << "printed entries sum to " << kCounterexamplePrintedTrace << "; normalized by the trace";
    return {counterexample_state_printed(), label, {note.str()}};
  }
  if (family == "werner") {
    expect_count(params, 1, 1, family);
    return {werner(parse_real(params[0], "werner")), label, {}};
  }
  if (family == "bell-diag" || family == "bell_diagonal") {
    expect_count(params, 3, 3, family);
    return {bell_diagonal(parse_real(params[0], "bell-diag"), parse_real(params[1], "bell-diag"),
                          parse_real(params[2], "bell-diag")),
            label,
            {}};
  }
  if (family == "x" || family == "x_state") {
    expect_count(params, 6, 6, family);
    CMat4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = parse_real(params[i], "x-state");
    const cplx r14 = parse_coherence(params[4]);
    const cplx r23 = parse_coherence(params[5]);
    m(0, 3) = r14;
    m(3, 0) = std::conj(r14);
    m(1, 2) = r23;
    m(2, 1) = std::conj(r23);
    double tr = 1.0;
    DensityMatrix4 rho = normalize_trace(m, tr);
    std::vector<std::string> notes;
    if (std::abs(tr - 1.0) >= DensityMatrix4::kTraceTol) {
      std::ostringstream note;
      note.precision(17);
      note << "entries sum to " << tr << "; normalized by the trace";
      notes.push_back(note.str());
    }
    return {rho, label, notes};
  }
  if (family == "random") {
    expect_count(params, 1, 2, family);
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(params[0].data(), params[0].data() + params[0].size(), seed);
    if (ec != std::errc() || ptr != params[0].data() + params[0].size())
      throw InvalidState("bad random seed '" + std::string(params[0]) + "'");
    int rank = 4;
    if (params.size() == 2) {
      const auto [p2, ec2] = std::from_chars(params[1].data(), params[1].data() + params[1].size(), rank);
      if (ec2 != std::errc() || p2 != params[1].data() + params[1].size() || rank < 1 || rank > 4)
        throw InvalidState("bad random rank '" + std::string(params[1]) + "'");
    }
    return {random_state(seed, rank), label, {}};
  }
  throw InvalidState("unknown state family '" + std::string(family) + "'");
}

}  // namespace qdiscord
