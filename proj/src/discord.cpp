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

#include "qdiscord/discord.hpp"

#include "qdiscord/xstate.hpp"

namespace qdiscord {

std::string to_string(Method m) {
  switch (m) {
    case Method::stationary:
      return "stationary";
    case Method::oracle:
      return "oracle";
    case Method::xstate_analytic:
      return "xstate_analytic";
  }
  return "unknown";
}

namespace {

DiscordReport via_stationary(const DensityMatrix4& rho, double mutual_info, const SolverOptions& solver) {
  DiscordReport r;
  r.method = Method::stationary;
  r.mutual_info = mutual_info;

  CJDecomposition d;
  try {
    d = decompose(rho);
  } catch (const SingularMarginal&) {
    // A pure marginal forces a product state: nothing is quantum.
    r.singular_marginal = true;
    r.classical_corr = mutual_info;
    r.discord = 0.0;
    r.optimal = {0.5 * kPi, 0.0};
    return r;
  }
  const AffineChannel ch = affine_from_kraus(d.kraus);
  std::vector<StationaryPoint> pts = find_stationary_points(ch, d.gamma, solver);
  for (auto& p : pts) p.angles = fold_angles(to_original_frame(d.basis_rotation, p.angles));

  r.classical_corr = pts.front().objective;
  r.discord = r.mutual_info - r.classical_corr;
  r.optimal = pts.front().angles;
  r.stationary_points = std::move(pts);
  return r;
}

}  // namespace

DiscordReport discord(const DensityMatrix4& rho, const DiscordOptions& opts) {
  const double mi = mutual_information(rho);
  DiscordReport r;
  switch (opts.method) {
    case Method::stationary:
      r = via_stationary(rho, mi, opts.solver);
      break;
    case Method::oracle: {
      const OracleResult o = grid_oracle(rho, opts.oracle_theta, opts.oracle_phi, opts.solver.threads);
      r.method = Method::oracle;
      r.mutual_info = mi;
      r.classical_corr = o.classical_corr;
      r.discord = mi - o.classical_corr;
      r.optimal = o.best;
      break;
    }
    case Method::xstate_analytic:
      try {
        r = analytic_discord_x(rho);
      } catch (const NotApplicable&) {
        if (!opts.allow_fallback) throw;
        r = via_stationary(rho, mi, opts.solver);
        r.fell_back = true;
      }
      break;
  }
  if (opts.verify) {
    const OracleResult o = grid_oracle(rho, opts.oracle_theta, opts.oracle_phi, opts.solver.threads);
    r.oracle_delta = r.discord - (mi - o.classical_corr);
  }
  return r;
}

}  // namespace qdiscord
