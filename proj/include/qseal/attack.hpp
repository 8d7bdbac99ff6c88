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

#include <cstddef>
#include <vector>

#include "qseal/matrix.hpp"
#include "qseal/seal.hpp"

namespace qseal {

inline constexpr double kHelstromTolerance = 1e-10;
inline constexpr double kCompletenessTolerance = 1e-9;
inline constexpr double kGainSlack = 1e-12;

/// q / q_max clamped to [0, 1]; ratios within kGainSlack of 1 snap to 1 so a
/// q_max recomputed from amplitudes one ulp off still yields the Helstrom end.
double gain_ratio(double q, double q_max);

/// Split of rho0 - rho1 into positive parts with orthogonal supports,
/// rho0 - rho1 = q0 - q1, together with the Helstrom projectors. Eigenvalues
/// within [-tol, tol] belong to pi1.
struct HelstromDecomposition {
  ComplexMatrix q0;
  ComplexMatrix q1;
  ComplexMatrix pi0;
  ComplexMatrix pi1;
};

HelstromDecomposition helstrom_decomposition(const ComplexMatrix& rho0, const ComplexMatrix& rho1,
                                             double tol = kHelstromTolerance);

/// Measurement operators on the public factor. Outcome j has probability
/// Tr(N_j^dagger N_j rho).
struct Povm {
  std::vector<ComplexMatrix> operators;

  std::size_t outcomes() const noexcept { return operators.size(); }
  std::size_t dim() const { return operators.front().rows(); }
};

/// max |sum_j N_j^dagger N_j - I|.
double completeness_error(const Povm& p);

/// The trivial one-outcome measurement {I}.
Povm identity_povm(std::size_t dim);

/// Two-outcome attack with information gain q:
///   M_0 = sqrt((1 + q/q_max)/2) pi0 + sqrt((1 - q/q_max)/2) pi1,
///   M_1 = sqrt((1 - q/q_max)/2) pi0 + sqrt((1 + q/q_max)/2) pi1.
/// q = q_max is the Helstrom measurement, q = 0 leaves the state untouched.
/// q may exceed q_max by kGainSlack.
Povm build_attack(const HelstromDecomposition& d, double q, double q_max);

/// p_j = Tr(N_j^dagger N_j rho), rounding noise above -1e-12 clamped to zero.
std::vector<double> outcome_distribution(const Povm& p, const ComplexMatrix& rho);

/// Half the L1 distance between the outcome distributions on rho0 and rho1.
double classical_l1(const Povm& p, const ComplexMatrix& rho0, const ComplexMatrix& rho1);

/// sum_j (N_j (x) I) |psi><psi| (N_j (x) I)^dagger on the full bipartite space.
ComplexMatrix apply_channel(const Povm& p, const StateVector& psi, std::size_t dim_b, std::size_t dim_a);

/// Probability that reading outcome j as bit j recovers the sealed bit,
/// averaged over equally likely bits. Requires exactly two outcomes.
double guess_probability(const SealScheme& s, const Povm& p);

struct OverlapReport {
  double a = 0.0;            // <psi0| pi0 (x) I |psi0>
  double one_minus_a = 0.0;  // <psi0| pi1 (x) I |psi0>
  double a_minus_qmax = 0.0;  // <psi1| pi0 (x) I |psi1>
  double complement = 0.0;    // <psi1| pi1 (x) I |psi1>
  // Same three quantities from a and q_max alone.
  double expected_one_minus_a = 0.0;
  double expected_a_minus_qmax = 0.0;
  double expected_complement = 0.0;
};

/// q_max is read off the decomposition as Tr(q0).
OverlapReport overlap_report(const SealScheme& s, const HelstromDecomposition& d);

/// <psi| (op (x) I) |psi> for an operator on the public factor.
Complex public_expectation(const ComplexMatrix& op, const StateVector& psi, std::size_t dim_b,
                           std::size_t dim_a);

}  // namespace qseal
