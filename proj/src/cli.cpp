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

#include "qdiscord/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "qdiscord/bloch.hpp"
#include "qdiscord/choi.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/parallel.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord::cli {

namespace {

constexpr int kMinOracleTheta = 64;
constexpr int kMinOraclePhi = 128;

struct Grid {
  int n_theta = 0;
  int n_phi = 0;
};

struct RunConfig {
  std::string state;
  std::string file;
  std::string method = "stationary";
  bool verify = false;
  bool fallback = false;
  std::string grid;
  std::string output;
  int threads = 1;
};

std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", places, v);
  std::string s = buf;
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string padded(double v) {
  const std::string s = fixed(v, 12);
  return (s.front() == '-' ? "  " : "   ") + s;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

Grid parse_grid(const std::string& text, Grid fallback, Grid minimum) {
  if (text.empty()) return fallback;
  const auto x = text.find('x');
  Grid g;
  bool ok = x != std::string::npos;
  if (ok) {
    const char* b = text.data();
    auto r1 = std::from_chars(b, b + x, g.n_theta);
    auto r2 = std::from_chars(b + x + 1, b + text.size(), g.n_phi);
    ok = r1.ec == std::errc() && r1.ptr == b + x && r2.ec == std::errc() && r2.ptr == b + text.size();
  }
  if (!ok) throw CLI::ValidationError("--grid", "expected NTHETAxNPHI, got '" + text + "'");
  if (g.n_theta < minimum.n_theta || g.n_phi < minimum.n_phi)
    throw CLI::ValidationError("--grid", "resolution must be at least " + std::to_string(minimum.n_theta) + "x" +
                                             std::to_string(minimum.n_phi));
  return g;
}

ResolvedState load(const RunConfig& cfg) {
  if (!cfg.file.empty()) return load_state_file(cfg.file);
  return resolve_named_state(cfg.state);
}

void print_state_header(const ResolvedState& s, std::ostream& out) {
  out << "state       " << s.label << "\n";
  for (const auto& n : s.notes) out << "note        " << n << "\n";
}

std::string angle_pi(double radians) { return fixed(radians / kPi, 6); }

int cmd_discord(const RunConfig& cfg, std::ostream& out) {
  const ResolvedState s = load(cfg);
  DiscordOptions opts;
  if (cfg.method == "stationary") {
    opts.method = Method::stationary;
  } else if (cfg.method == "oracle") {
    opts.method = Method::oracle;
  } else {
    opts.method = Method::xstate_analytic;
  }
  opts.verify = cfg.verify;
  opts.allow_fallback = cfg.fallback;
  const Grid g = parse_grid(cfg.grid, {kMinOracleTheta, kMinOraclePhi}, {kMinOracleTheta, kMinOraclePhi});
  opts.oracle_theta = g.n_theta;
  opts.oracle_phi = g.n_phi;
  opts.solver.threads = cfg.threads;

  const DiscordReport r = discord(s.rho, opts);
  print_state_header(s, out);
  out << "method      " << to_string(r.method) << (r.fell_back ? " (fallback from xstate_analytic)" : "") << "\n";
  if (r.singular_marginal) out << "note        b-marginal is pure (SingularMarginal): Q = 0 shortcut\n";
  out << "I           " << fixed(r.mutual_info, 9) << "\n";
  out << "C           " << fixed(r.classical_corr, 9) << "\n";
  out << "Q           " << fixed(r.discord, 9) << "\n";
  out << "theta/pi    " << angle_pi(r.optimal.theta) << "\n";
  out << "phi/pi      " << angle_pi(r.optimal.phi) << "\n";
  if (r.oracle_delta) out << "oracle dQ   " << sci(*r.oracle_delta) << "\n";
  return kOk;
}

int cmd_stationary(const RunConfig& cfg, std::ostream& out) {
  const ResolvedState s = load(cfg);
  print_state_header(s, out);
  CJDecomposition d;
  try {
    d = decompose(s.rho);
  } catch (const SingularMarginal& e) {
    out << "SingularMarginal: " << e.what() << "; Q = 0 shortcut, no stationary equations to solve\n";
    return kOk;
  }
  const AffineChannel ch = affine_from_kraus(d.kraus);
  SolverOptions opts;
  opts.threads = cfg.threads;
  const auto pts = find_stationary_points(ch, d.gamma, opts);
  char line[160];
  std::snprintf(line, sizeof(line), "%-16s %10s %10s %14s %12s\n", "class", "theta/pi", "phi/pi", "objective",
                "grad_norm");
  out << line;
  for (const auto& p : pts) {
    const MeasurementAngles a = fold_angles(to_original_frame(d.basis_rotation, p.angles));
    std::snprintf(line, sizeof(line), "%-16s %10s %10s %14s %12.3e\n", to_string(p.cls).c_str(),
                  angle_pi(a.theta).c_str(), angle_pi(a.phi).c_str(), fixed(p.objective, 9).c_str(), p.grad_norm);
    out << line;
  }
  return kOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ResolvedState s = load(cfg);
  const Grid g = parse_grid(cfg.grid, {kMinOracleTheta, kMinOraclePhi}, {2, 1});
  const double dtheta = kPi / (g.n_theta - 1);
  const double dphi = 2.0 * kPi / g.n_phi;
  const double s_a = von_neumann_entropy(partial_trace_b(s.rho));

  std::vector<double> cond(static_cast<std::size_t>(g.n_theta) * g.n_phi);
  parallel_for(static_cast<std::size_t>(g.n_theta), cfg.threads, [&](std::size_t i) {
    for (int j = 0; j < g.n_phi; ++j)
      cond[i * g.n_phi + j] = conditional_entropy_direct(s.rho, {i * dtheta, j * dphi});
  });

  std::string csv = "theta,phi,cond_entropy,objective\n";
  csv.reserve(cond.size() * 80);
  for (int i = 0; i < g.n_theta; ++i) {
    for (int j = 0; j < g.n_phi; ++j) {
      const double h = cond[static_cast<std::size_t>(i) * g.n_phi + j];
      csv += shortest(i * dtheta);
      csv += ',';
      csv += shortest(j * dphi);
      csv += ',';
      csv += shortest(h);
      csv += ',';
      csv += shortest(s_a - h);
      csv += '\n';
    }
  }
  if (cfg.output.empty()) {
    out << csv;
    return kOk;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f || !(f << csv) || !f.flush()) {
    err << "error: cannot write '" << cfg.output << "'\n";
    return kInternal;
  }
  return kOk;
}

void print_mat2(const CMat2& m, std::ostream& out, const std::string& indent) {
  for (std::size_t i = 0; i < 2; ++i)
    out << indent << format_complex(m(i, 0)) << "  " << format_complex(m(i, 1)) << "\n";
}

int cmd_channel(const RunConfig& cfg, std::ostream& out) {
  const ResolvedState s = load(cfg);
  print_state_header(s, out);
  CJDecomposition d;
  try {
    d = decompose(s.rho);
  } catch (const SingularMarginal& e) {
    out << "SingularMarginal: " << e.what() << "\n";
    out << "note        the state is a product state; discord takes the Q = 0 shortcut\n";
    return kOk;
  }
  const AffineChannel ch = affine_from_kraus(d.kraus);
  const double recon = frobenius_norm(reconstruct(d).matrix() - s.rho.matrix());
  out << "gamma       " << fixed(d.gamma, 12) << "  (" << angle_pi(d.gamma) << " pi)\n";
  out << "eta\n";
  for (const auto& row : ch.eta) out << " " << padded(row[0]) << padded(row[1]) << padded(row[2]) << "\n";
  out << "c" << padded(ch.c.x) << padded(ch.c.y) << padded(ch.c.z) << "\n";
  out << "kraus       " << d.kraus.operators.size() << " operator(s)\n";
  for (std::size_t m = 0; m < d.kraus.operators.size(); ++m) {
    out << "  E" << m << "\n";
    print_mat2(d.kraus.operators[m], out, "    ");
  }
  out << "completeness residual    " << sci(d.kraus.completeness_residual()) << "\n";
  out << "reconstruction residual  " << sci(recon) << "\n";
  out << "channel fidelity         " << fixed(channel_fidelity(s.rho, d), 12) << "\n";
  return kOk;
}

void add_state_options(CLI::App* sub, RunConfig& cfg) {
  auto* st = sub->add_option("--state", cfg.state, "named state: lu[:printed] | werner:p | bell-diag:x,y,z | x:r11,r22,r33,r44,r14,r23 | random:seed[,rank]");
  auto* fi = sub->add_option("--file", cfg.file, "density-matrix text file");
  st->excludes(fi);
  fi->excludes(st);
  sub->add_option("--threads", cfg.threads, "worker threads (output does not depend on it)")
      ->check(CLI::Range(1, 256));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit quantum discord via channel decomposition and stationary-point solving", "qdiscord"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* d = app.add_subcommand("discord", "compute I, C and Q");
  add_state_options(d, cfg);
  d->add_option("--method", cfg.method, "stationary | oracle | xstate")
      ->check(CLI::IsMember({"stationary", "oracle", "xstate"}));
  d->add_flag("--verify", cfg.verify, "cross-check against the grid oracle");
  d->add_flag("--fallback", cfg.fallback, "fall back to the stationary solver when xstate does not apply");
  d->add_option("--grid", cfg.grid, "oracle resolution NTHETAxNPHI (minimum 64x128)");

  auto* s = app.add_subcommand("stationary", "list stationary points of the measured mutual information");
  add_state_options(s, cfg);

  auto* w = app.add_subcommand("sweep", "write the objective landscape as CSV");
  add_state_options(w, cfg);
  w->add_option("--grid", cfg.grid, "resolution NTHETAxNPHI (default 64x128)");
  w->add_option("--output,-o", cfg.output, "CSV path (default: standard output)");

  auto* c = app.add_subcommand("channel", "show the extracted channel");
  add_state_options(c, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInternal;
  }

  if (cfg.state.empty() == cfg.file.empty()) {
    err << "error: give exactly one of --state or --file\n";
    return kInternal;
  }

  try {
    if (d->parsed()) return cmd_discord(cfg, out);
    if (s->parsed()) return cmd_stationary(cfg, out);
    if (w->parsed()) return cmd_sweep(cfg, out, err);
    if (c->parsed()) return cmd_channel(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadState;
  } catch (const InvalidState& e) {
    err << "error: " << e.what() << "\n";
    return kBadState;
  } catch (const NotApplicable& e) {
    err << "error: method not applicable: " << e.what() << " (pass --fallback to use the stationary solver)\n";
    return kNotApplicable;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}

}  // namespace qdiscord::cli
