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
#include <string>
#include <vector>

#include "qseal/optimizer.hpp"
#include "qseal/seal.hpp"

namespace qseal {

/// Everything the attack with information gain q reveals about a scheme.
struct AttackAnalysis {
  double q = 0.0;
  double q_max = 0.0;
  double a = 0.0;
  double guess_pr = 0.0;
  double fbar_sim = 0.0;
  double fbar_closed = 0.0;  // fbar_at_a(a, q, q_max)
  double fbar_minmax = 0.0;
  double detection_bound = 0.0;  // 1 - fbar_sim
};

/// Throws QmaxZero for schemes whose reductions coincide and QOutOfRange
/// unless 0 <= q <= q_max (q up to 1e-12 above q_max is clamped).
AttackAnalysis analyze_attack(const SealScheme& s, double q);

struct TradeoffPoint {
  double q = 0.0;
  double guess_pr = 0.0;
  double fbar_sim = 0.0;
  double fbar_closed = 0.0;
  double detection_bound = 0.0;
};

/// Rows at q = q_max * t / steps for t = 1..steps. The parallel and serial
/// paths produce identical rows.
std::vector<TradeoffPoint> tradeoff_curve(const SealScheme& s, std::size_t steps,
                                          Execution execution = Execution::kParallel);

/// "%.15g" rendering shared by the CSV and text reports.
std::string format_real(double x);

/// Header `q,guess_pr,fbar_sim,fbar_closed,detection_bound`, LF line endings.
std::string curve_to_csv(const std::vector<TradeoffPoint>& points);

}  // namespace qseal
