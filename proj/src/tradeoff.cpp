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

#include "qseal/tradeoff.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <string>

#include "qseal/attack.hpp"
#include "qseal/error.hpp"
#include "qseal/fidelity.hpp"

namespace qseal {

namespace {

struct PreparedScheme {
  SchemeAnalysis analysis;
  HelstromDecomposition helstrom;
  double a = 0.0;
};

PreparedScheme prepare(const SealScheme& s) {
  SchemeAnalysis analysis = analyze_scheme(s);
  HelstromDecomposition helstrom = helstrom_decomposition(analysis.rho0, analysis.rho1);
  const double a = overlap_report(s, helstrom).a;
  return {std::move(analysis), std::move(helstrom), a};
}

AttackAnalysis evaluate(const SealScheme& s, const PreparedScheme& prep, double q) {
  const double q_max = prep.analysis.q_max;
  if (!(q >= 0.0 && q <= q_max + kGainSlack)) {
    throw Error(ErrorCode::kQOutOfRange,
                "q = " + format_real(q) + " outside [0, " + format_real(q_max) + "]");
  }
  q = std::min(q, q_max);
  const Povm attack = build_attack(prep.helstrom, q, q_max);
  AttackAnalysis r;
  r.q = q;
  r.q_max = q_max;
  r.a = prep.a;
  r.guess_pr = guess_probability(s, attack);
  r.fbar_sim = average_fidelity(s, attack);
  r.fbar_closed = fbar_at_a(std::clamp(prep.a, q_max, 1.0), q, q_max);
  r.fbar_minmax = fbar_minmax(q, q_max);
  r.detection_bound = 1.0 - r.fbar_sim;
  return r;
}

}  // namespace

AttackAnalysis analyze_attack(const SealScheme& s, double q) { return evaluate(s, prepare(s), q); }

std::vector<TradeoffPoint> tradeoff_curve(const SealScheme& s, std::size_t steps, Execution execution) {
  if (steps < 2) throw Error(ErrorCode::kInvalidArgument, "a curve needs at least 2 steps");
  const PreparedScheme prep = prepare(s);
  const double q_max = prep.analysis.q_max;
  std::vector<TradeoffPoint> rows(steps);
  std::vector<std::exception_ptr> failures(steps);
  auto fill = [&](std::size_t t) {
    try {
      const double q = q_max * static_cast<double>(t + 1) / static_cast<double>(steps);
      const AttackAnalysis r = evaluate(s, prep, q);
      rows[t] = {r.q, r.guess_pr, r.fbar_sim, r.fbar_closed, r.detection_bound};
    } catch (...) {
      failures[t] = std::current_exception();
    }
  };
  const auto n = static_cast<std::ptrdiff_t>(steps);
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t t = 0; t < n; ++t) fill(static_cast<std::size_t>(t));
  } else {
    for (std::ptrdiff_t t = 0; t < n; ++t) fill(static_cast<std::size_t>(t));
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

std::string curve_to_csv(const std::vector<TradeoffPoint>& points) {
  std::string out = "q,guess_pr,fbar_sim,fbar_closed,detection_bound\n";
  for (const auto& p : points) {
    out += format_real(p.q) + ',' + format_real(p.guess_pr) + ',' + format_real(p.fbar_sim) + ',' +
           format_real(p.fbar_closed) + ',' + format_real(p.detection_bound) + '\n';
  }
  return out;
}

}  // namespace qseal
