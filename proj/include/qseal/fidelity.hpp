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

#include <optional>

#include "qseal/attack.hpp"
#include "qseal/seal.hpp"

namespace qseal {

/// Average probability, over equally likely bits, that the post-measurement
/// state passes a projective check against the original encoding:
///   F = (1/2) sum_i sum_j |<psi_i| (N_j (x) I) |psi_i>|^2.
/// Clamped to [0, 1].
double average_fidelity(const SealScheme& s, const Povm& p);

/// <psi_bit| E(|psi_bit><psi_bit|) |psi_bit>, computed through the full
/// bipartite channel output rather than the per-operator amplitudes.
double verification_pass_probability(const SealScheme& s, const Povm& p, int bit);

/// Average fidelity of the two-outcome attack as a function of the overlap
/// a = <psi0| pi0 (x) I |psi0>:
///   (1 - 2a)(1 + q_max) + 2a^2 + q_max^2
///     - [2a^2 + (q_max - 2a)(1 + q_max)] sqrt(1 - q^2/q_max^2).
/// Requires q_max > 0, 0 <= q <= q_max and q_max <= a <= 1 (1e-9 slack on a).
/// Returns exactly 1 at q = 0, where the bracket multiplies 1 and collapses.
double fbar_at_a(double a, double q, double q_max);

/// Min over schemes of max over measurements of the average fidelity:
///   (1 + q_max^2)/2 + (1 - q_max^2)/2 sqrt(1 - q^2/q_max^2)  for q > 0,
///   1                                                       for q = 0.
/// q_max = 0 throws QmaxZero; the value is discontinuous at (0, 0).
double fbar_minmax(double q, double q_max);

struct FidelityReport {
  double f_bar = 0.0;
  double detection = 0.0;  // 1 - f_bar
  double q = 0.0;
  double q_max = 0.0;
  std::optional<double> a;
};

FidelityReport fidelity_report(const SealScheme& s, const Povm& p, double q, double q_max,
                               std::optional<double> a = std::nullopt);

}  // namespace qseal
