// Copyright 2026 The QSeal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force search over Bob's measurements. For a fixed information gain q
// it maximizes the average fidelity over K-outcome POVMs on a qubit public
// factor, which bounds from below what any reader can achieve and, on the
// stringent scheme, must never exceed fbar_minmax(q, q_max).
//
// Restarts run in parallel under OpenMP when Execution::kParallel is chosen;
// Execution::kSerial runs the identical per-restart code on one thread and is
// the reference the parallel path is tested against.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qseal/attack.hpp"
#include "qseal/seal.hpp"

namespace qseal {

enum class Execution { kSerial, kParallel };

inline constexpr std::size_t kMaxOutcomes = 8;

/// K operators N_j = [[alpha_j, beta_j], [gamma_j, delta_j]] flattened as
/// (Re alpha, Im alpha, Re beta, Im beta, Re gamma, Im gamma, Re delta, Im delta)
/// per operator; raw.size() == 8 * k.
struct PovmParameterization {
  std::size_t k = 0;
  std::vector<double> raw;
};

PovmParameterization encode_povm(const Povm& p);

/// Decodes the raw operators and right-multiplies each by S^{-1/2}, where
/// S = sum_j N_j^dagger N_j. Throws SingularRetraction when the smallest
/// eigenvalue of S is at most 1e-12.
Povm retract_to_povm(const PovmParameterization& p);

/// Dimension-generic retraction through an eigendecomposition of S.
Povm retract_povm(const Povm& p);

/// Random K-outcome POVM on a dim-dimensional space: Gaussian operator
/// entries followed by retraction.
Povm sample_povm(std::size_t dim, std::size_t k, std::mt19937_64& rng);

struct OptimizerOptions {
  std::size_t outcomes = 4;
  std::size_t restarts = 64;
  std::uint64_t seed = 0;
  int penalty_rounds = 12;
  double initial_penalty = 10.0;
  int max_iterations = 2000;
  double spread_tolerance = 1e-10;
  double initial_step = 0.1;
  double feasibility_tolerance = 1e-6;
  bool warm_start = true;  // restart 0 starts at build_attack(q)
  Execution execution = Execution::kParallel;
};

struct RestartOutcome {
  std::size_t index = 0;
  bool feasible = false;
  double fbar = 0.0;
  double achieved_q = 0.0;
  Povm povm;
};

struct OptimizationResult {
  double best_fbar = 0.0;
  Povm best_povm;
  double achieved_q = 0.0;
  std::size_t restarts_used = 0;
  std::size_t feasible_restarts = 0;
  std::size_t best_restart = 0;
  double gap_to_bound = 0.0;  // best_fbar - fbar_minmax(q_target, q_max)
  double bound = 0.0;
  double q_target = 0.0;
  double q_max = 0.0;
  std::vector<RestartOutcome> restarts;  // indexed by restart
};

/// Requires a scheme with dim_b = 2, 0 <= q_target <= q_max, 2 <= k <= 8 and
/// at least one restart. Each restart runs penalized simplex descent on
///   F(N) - w (q(N) - q_target)^2
/// with w doubling per round, then slides every round's incumbent along a
/// path to a reference POVM until q(N) lands on q_target from above. Reported
/// objectives are re-evaluated with average_fidelity. Throws QOutOfRange,
/// InvalidArgument, or NoFeasiblePoint when no restart ends within the
/// feasibility tolerance.
OptimizationResult maximize_fidelity(const SealScheme& s, double q_target, const OptimizerOptions& options);

/// sum_j (|alpha_j|^2 + |delta_j|^2); at most 2 for every POVM.
double diagonal_weight(const Povm& p);

/// sum_j (alpha_j conj(delta_j) + conj(alpha_j) delta_j); bounded by
/// 2 sqrt(1 - q^2/q_max^2) on the stringent scheme.
double diagonal_coherence(const Povm& p);

struct BoundCheck {
  double q = 0.0;
  double bound = 0.0;
  double best_fbar = 0.0;
  double gap_to_bound = 0.0;
  double achieved_q = 0.0;
  double warm_start_fbar = 0.0;
  std::size_t feasible_restarts = 0;
  double max_diagonal_weight = 0.0;
  double max_coherence_excess = 0.0;  // max over restarts of coherence - 2 sqrt(1 - q^2/q_max^2)
};

struct BoundReport {
  double q_max = 0.0;
  std::vector<BoundCheck> checks;
};

inline constexpr double kBoundTolerance = 1e-6;

/// Runs maximize_fidelity on make_stringent_scheme(q_max) for every q in the
/// grid and checks best_fbar <= fbar_minmax(q, q_max) + 1e-6 together with
/// the diagonal weight and coherence inequalities on every feasible restart.
/// Throws BoundViolation naming q and the offending POVM.
BoundReport verify_bound(double q_max, const std::vector<double>& q_grid, const OptimizerOptions& options);

}  // namespace qseal
