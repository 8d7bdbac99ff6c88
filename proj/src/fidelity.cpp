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

#include "qseal/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qseal/error.hpp"

namespace qseal {

namespace {

constexpr double kOverlapSlack = 1e-9;

void require_public_operators(const SealScheme& s, const Povm& p) {
  if (p.operators.empty()) throw Error(ErrorCode::kDimensionMismatch, "empty POVM");
  for (const auto& op : p.operators) {
    if (op.rows() != s.dim_b || op.cols() != s.dim_b) {
      throw Error(ErrorCode::kDimensionMismatch, "POVM operator does not act on the public factor");
    }
  }
}

void require_q(double q, double q_max) {
  if (!(q_max >= 0.0 && q_max <= 1.0)) {
    throw Error(ErrorCode::kParamOutOfRange, "q_max = " + std::to_string(q_max) + " outside [0, 1]");
  }
  if (!(q >= 0.0 && q <= q_max + kGainSlack)) {
    throw Error(ErrorCode::kParamOutOfRange,
                "q = " + std::to_string(q) + " outside [0, " + std::to_string(q_max) + "]");
  }
}

double attenuation(double q, double q_max) {
  const double ratio = gain_ratio(q, q_max);
  return std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
}

}  // namespace

double average_fidelity(const SealScheme& s, const Povm& p) {
  validate_scheme(s);
  require_public_operators(s, p);
  double total = 0.0;
  for (int bit = 0; bit < 2; ++bit) {
    for (const auto& op : p.operators) total += std::norm(public_expectation(op, s.state(bit), s.dim_b, s.dim_a));
  }
  // Rounding in the amplitudes can push a contraction's value past 1.
  return std::clamp(0.5 * total, 0.0, 1.0);
}

double verification_pass_probability(const SealScheme& s, const Povm& p, int bit) {
  if (bit != 0 && bit != 1) throw Error(ErrorCode::kInvalidArgument, "bit must be 0 or 1");
  validate_scheme(s);
  require_public_operators(s, p);
  const StateVector& psi = s.state(bit);
  const ComplexMatrix out = apply_channel(p, psi, s.dim_b, s.dim_a);
  return inner_product(psi, apply(out, psi)).real();
}

double fbar_at_a(double a, double q, double q_max) {
  if (!(q_max > 0.0)) throw Error(ErrorCode::kParamOutOfRange, "fbar_at_a needs q_max > 0");
  require_q(q, q_max);
  if (!(a >= q_max - kOverlapSlack && a <= 1.0 + kOverlapSlack)) {
    throw Error(ErrorCode::kParamOutOfRange,
                "a = " + std::to_string(a) + " outside [" + std::to_string(q_max) + ", 1]");
  }
  if (q == 0.0) return 1.0;
  const double r = attenuation(q, q_max);
  return (1.0 - 2.0 * a) * (1.0 + q_max) + 2.0 * a * a + q_max * q_max -
         (2.0 * a * a + (q_max - 2.0 * a) * (1.0 + q_max)) * r;
}

double fbar_minmax(double q, double q_max) {
  if (q_max == 0.0) throw Error(ErrorCode::kQmaxZero, "the min-max fidelity is discontinuous at q_max = 0");
  require_q(q, q_max);
  if (q == 0.0) return 1.0;
  const double qm2 = q_max * q_max;
  return 0.5 * (1.0 + qm2) + 0.5 * (1.0 - qm2) * attenuation(q, q_max);
}

FidelityReport fidelity_report(const SealScheme& s, const Povm& p, double q, double q_max,
                               std::optional<double> a) {
  FidelityReport r;
  r.f_bar = average_fidelity(s, p);
  r.detection = 1.0 - r.f_bar;
  r.q = q;
  r.q_max = q_max;
  r.a = a;
  return r;
}

}  // namespace qseal
