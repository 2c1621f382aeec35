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

// State catalog, reproducible random states and the density-matrix text
// format.
//
// Text format (UTF-8):
//   * lines whose first non-blank character is '#' and blank lines are ignored;
//   * exactly four data lines, each with four whitespace-separated complex
//     tokens RE{+|-}IMj (for example 0.125-0.1j; the j suffix is mandatory
//     and a token contains no spaces);
//   * row-major, basis order |00>, |01>, |10>, |11>.
// A trace within 1e-2 of one is renormalized (and reported); anything
// further off is rejected.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qdiscord/qmat.hpp"

namespace qdiscord {

/// Reproducible normal deviates: std::mt19937_64 (fully specified by the
/// standard) feeding a Box-Muller transform. Callers own the generator.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on (0, 1) with 53 random bits.
  double uniform();
  double normal();
  cplx complex_normal() { return {normal(), normal()}; }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Haar-random 2x2 unitary.
CMat2 random_unitary2(Rng& rng);

/// Entries of the counterexample X state with three stationary points, as
/// printed. They sum to 0.9453.
inline constexpr double kCounterexampleDiagonal[4] = {0.0783, 0.1250, 0.1250, 0.6170};
inline constexpr double kCounterexampleCoherence = 0.1000;
inline constexpr double kCounterexamplePrintedTrace = 0.9453;
/// rho_44 completing the printed entries to unit trace.
inline constexpr double kCounterexampleCorrectedRho44 = 0.6717;

/// Counterexample state with rho_44 = kCounterexampleCorrectedRho44 (unit trace). This
/// reading has the state-dependent optimum near theta = 0.155 pi.
DensityMatrix4 counterexample_state();

/// The printed entries divided by their trace. Its optimum is the symmetric
/// universal solution.
DensityMatrix4 counterexample_state_printed();

/// (I + sum_k eta_k sigma_k (x) sigma_k) / 4. InvalidState outside the
/// tetrahedron of valid triples.
DensityMatrix4 bell_diagonal(double eta_x, double eta_y, double eta_z);

/// p |Phi+><Phi+| + (1 - p) I / 4, p in [-1/3, 1].
DensityMatrix4 werner(double p);

/// X state from its diagonal and the two anti-diagonal coherences.
DensityMatrix4 x_state(double r11, double r22, double r33, double r44, cplx r14, cplx r23);

/// G G^dagger / Tr with G a 4 x rank complex Ginibre matrix; resampled (up to
/// ten draws) while the b-marginal has an eigenvalue below 1e-6.
DensityMatrix4 random_state(std::uint64_t seed, int rank);

/// Same, drawing from a caller-owned generator.
DensityMatrix4 random_state(Rng& rng, int rank);

/// Largest |trace - 1| that parsing renormalizes instead of rejecting.
inline constexpr double kTraceWindow = 0.1;

/// Divides m by its trace when the trace is within `tol` of one; stores the
/// original trace. Throws InvalidState otherwise or when the result is not a
/// valid state.
DensityMatrix4 normalize_trace(const CMat4& m, double& original_trace, double tol = kTraceWindow);

struct ResolvedState {
  DensityMatrix4 rho;
  std::string label;
  std::vector<std::string> notes;
};

/// "lu" (alias "counterexample"), "lu:printed", "werner:p", "bell-diag:x,y,z", "x:r11,r22,r33,r44,r14,r23" (complex
/// tokens allowed for the coherences) or "random:seed[,rank]". Throws
/// InvalidState for unknown families or bad parameters.
ResolvedState resolve_named_state(std::string_view spec);

// ---- text format --------------------------------------------------------

/// Parses one RE{+|-}IMj, RE or IMj token; nullopt when malformed or
/// non-finite.
std::optional<cplx> parse_complex_token(std::string_view token);

/// Shortest decimal form that reads back bit-exactly.
std::string format_complex(cplx z);

struct ParsedState {
  DensityMatrix4 rho;
  std::optional<double> original_trace;  // set when renormalized
};

/// Throws ParseError naming the line for every kind of defect.
ParsedState parse_density_matrix(std::string_view text);

std::string serialize_density_matrix(const DensityMatrix4& rho);

/// Reads and parses a file. ParseError messages are prefixed with the path.
ResolvedState load_state_file(const std::string& path);

}  // namespace qdiscord
