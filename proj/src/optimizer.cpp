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

#include "qseal/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <sstream>
#include <string>

#include "qseal/error.hpp"
#include "qseal/fidelity.hpp"

namespace qseal {

namespace {

constexpr double kSingularThreshold = 1e-12;
// q may undershoot the target by this much and still count as "from above".
constexpr double kBracketSlack = 1e-13;
constexpr int kBisectionSteps = 80;

using Mat2 = std::array<Complex, 4>;  // row-major 2x2
using OperatorSet = std::array<Mat2, kMaxOutcomes>;

Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Decodes raw parameters and applies S^{-1/2} in closed form. For a 2x2
// positive S, sqrt(S) = (S + sqrt(det S) I) / sqrt(tr S + 2 sqrt(det S)).
bool retract_raw(std::span<const double> raw, std::size_t k, OperatorSet& ops) {
  double s00 = 0.0;
  double s11 = 0.0;
  Complex s01 = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const double* r = raw.data() + 8 * j;
    Mat2& n = ops[j];
    n = {Complex(r[0], r[1]), Complex(r[2], r[3]), Complex(r[4], r[5]), Complex(r[6], r[7])};
    s00 += std::norm(n[0]) + std::norm(n[2]);
    s11 += std::norm(n[1]) + std::norm(n[3]);
    s01 += std::conj(n[0]) * n[1] + std::conj(n[2]) * n[3];
  }
  const double tr = s00 + s11;
  const double det = s00 * s11 - std::norm(s01);
  const double half = 0.5 * tr;
  const double disc = std::sqrt(std::max(0.0, half * half - det));
  const double min_eig = det / (half + disc);
  if (!(min_eig > kSingularThreshold) || !std::isfinite(tr)) return false;

  const double sd = std::sqrt(det);
  const double denom = std::sqrt(tr + 2.0 * sd);
  const double r00 = (s00 + sd) / denom;
  const double r11 = (s11 + sd) / denom;
  const Complex r01 = s01 / denom;
  const double det_r = r00 * r11 - std::norm(r01);
  const Mat2 inv_sqrt = {r11 / det_r, -r01 / det_r, -std::conj(r01) / det_r, r00 / det_r};
  for (std::size_t j = 0; j < k; ++j) ops[j] = multiply(ops[j], inv_sqrt);
  return true;
}

Povm to_povm(const OperatorSet& ops, std::size_t k) {
  Povm p;
  p.operators.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    p.operators.push_back(ComplexMatrix{{ops[j][0], ops[j][1]}, {ops[j][2], ops[j][3]}});
  }
  return p;
}

struct Evaluation {
  bool ok = false;
  double fbar = 0.0;
  double q = 0.0;
};

// F = (1/2) sum_ij |Tr(N_j rho_i)|^2 and q = (1/2) sum_j |Tr(N_j^dag N_j (rho0 - rho1))|,
// using <psi_i| N (x) I |psi_i> = Tr(N rho_i).
class FidelityKernel {
 public:
  FidelityKernel(const ComplexMatrix& rho0, const ComplexMatrix& rho1) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        rho_[0][i * 2 + j] = rho0(i, j);
        rho_[1][i * 2 + j] = rho1(i, j);
        diff_[i * 2 + j] = rho0(i, j) - rho1(i, j);
      }
    }
  }

  Evaluation operator()(std::span<const double> raw, std::size_t k) const {
    OperatorSet ops;
    if (!retract_raw(raw, k, ops)) return {};
    Evaluation e{true, 0.0, 0.0};
    for (std::size_t j = 0; j < k; ++j) {
      const Mat2& n = ops[j];
      for (const auto& rho : rho_) e.fbar += std::norm(trace_product(n, rho));
      const Mat2 effect = {std::norm(n[0]) + std::norm(n[2]), std::conj(n[0]) * n[1] + std::conj(n[2]) * n[3],
                           std::conj(n[1]) * n[0] + std::conj(n[3]) * n[2], std::norm(n[1]) + std::norm(n[3])};
      e.q += std::abs(trace_product(effect, diff_).real());
    }
    e.fbar *= 0.5;
    e.q *= 0.5;
    return e;
  }

 private:
  static Complex trace_product(const Mat2& a, const Mat2& b) {
    return a[0] * b[0] + a[1] * b[2] + a[2] * b[1] + a[3] * b[3];
  }

  std::array<Mat2, 2> rho_;
  Mat2 diff_;
};

// Derivative-free simplex descent (minimization) with the standard
// reflection/expansion/contraction/shrink coefficients.
template <typename Objective>
std::vector<double> nelder_mead(const Objective& f, const std::vector<double>& start, double step,
                                int max_iterations, double spread_tolerance) {
  const std::size_t n = start.size();
  std::vector<std::vector<double>> x(n + 1, start);
  std::vector<double> fx(n + 1);
  for (std::size_t i = 0; i < n; ++i) x[i + 1][i] += step;
  for (std::size_t i = 0; i <= n; ++i) fx[i] = f(x[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto point_along = [&](double coeff, const std::vector<double>& from, std::vector<double>& out) {
    for (std::size_t d = 0; d < n; ++d) out[d] = centroid[d] + coeff * (from[d] - centroid[d]);
  };

  for (int it = 0; it < max_iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];
    if (fx[worst] - fx[best] <= spread_tolerance) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < n; ++d) centroid[d] += x[i][d];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    point_along(-1.0, x[worst], trial);
    const double fr = f(trial);
    if (fr < fx[best]) {
      point_along(-2.0, x[worst], trial2);
      const double fe = f(trial2);
      if (fe < fr) {
        x[worst] = trial2;
        fx[worst] = fe;
      } else {
        x[worst] = trial;
        fx[worst] = fr;
      }
      continue;
    }
    if (fr < fx[second_worst]) {
      x[worst] = trial;
      fx[worst] = fr;
      continue;
    }
    if (fr < fx[worst]) {
      point_along(0.5, trial, trial2);  // outside contraction
      const double fc = f(trial2);
      if (fc <= fr) {
        x[worst] = trial2;
        fx[worst] = fc;
        continue;
      }
    } else {
      point_along(0.5, x[worst], trial2);  // inside contraction
      const double fc = f(trial2);
      if (fc < fx[worst]) {
        x[worst] = trial2;
        fx[worst] = fc;
        continue;
      }
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t d = 0; d < n; ++d) x[i][d] = x[best][d] + 0.5 * (x[i][d] - x[best][d]);
      fx[i] = f(x[i]);
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(fx.begin(), fx.end()) - fx.begin());
  return x[best];
}

std::vector<double> padded_raw(const Povm& p, std::size_t k) {
  std::vector<double> raw = encode_povm(p).raw;
  raw.resize(8 * k, 0.0);
  return raw;
}

struct SearchContext {
  FidelityKernel kernel;
  std::size_t k;
  double q_target;
  std::vector<double> anchor_high;  // q = q_max
  std::vector<double> anchor_low;   // q = 0
  std::vector<double> warm_start;   // q = q_target
  OptimizerOptions options;
};

struct Candidate {
  bool feasible = false;
  double fbar = -std::numeric_limits<double>::infinity();
  double q = 0.0;
  std::vector<double> raw;
};

// Moves x along the straight raw-parameter path towards an anchor POVM on the
// other side of the target until q lands in [target - slack, target + slack].
// Starting below, the returned end always has q >= target - slack, so the
// fidelity it reports is bounded by the min-max value at the target.
Candidate polish(const SearchContext& ctx, const std::vector<double>& x) {
  const double target = ctx.q_target;
  const Evaluation ex = ctx.kernel(x, ctx.k);
  if (!ex.ok) return {};
  if (std::abs(ex.q - target) <= kBracketSlack) return {true, ex.fbar, ex.q, x};

  const bool above = ex.q > target;
  const std::vector<double>& anchor = above ? ctx.anchor_low : ctx.anchor_high;
  auto point = [&](double t) {
    std::vector<double> y(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) y[d] = (1.0 - t) * x[d] + t * anchor[d];
    return y;
  };
  // `keep` marks the side the answer is taken from.
  auto keep = [&](const Evaluation& e) {
    return above ? (e.ok && e.q <= target + kBracketSlack) : (e.ok && e.q >= target - kBracketSlack);
  };

  const Evaluation ea = ctx.kernel(anchor, ctx.k);
  if (!keep(ea)) return {};
  double t_keep = 1.0;
  double t_other = 0.0;
  Evaluation e_keep = ea;
  for (int step = 0; step < kBisectionSteps; ++step) {
    if (std::abs(e_keep.q - target) <= kBracketSlack) break;
    const double mid = 0.5 * (t_keep + t_other);
    if (mid == t_keep || mid == t_other) break;
    const Evaluation em = ctx.kernel(point(mid), ctx.k);
    if (keep(em)) {
      t_keep = mid;
      e_keep = em;
    } else {
      t_other = mid;
    }
  }
  if (e_keep.q < target - kBracketSlack) return {};
  return {true, e_keep.fbar, e_keep.q, point(t_keep)};
}

std::vector<double> random_start(const SearchContext& ctx, std::size_t index) {
  const std::uint64_t seed = ctx.options.seed;
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(8 * ctx.k);
  for (double& v : x) v = normal(rng);
  return x;
}

Candidate run_restart(const SearchContext& ctx, std::size_t index) {
  const OptimizerOptions& opt = ctx.options;
  std::vector<double> x = (index == 0 && opt.warm_start) ? ctx.warm_start : random_start(ctx, index);

  Candidate best = polish(ctx, x);
  auto consider = [&](Candidate c) {
    if (c.feasible && (!best.feasible || c.fbar > best.fbar)) best = std::move(c);
  };

  double weight = opt.initial_penalty;
  for (int round = 0; round < opt.penalty_rounds; ++round) {
    auto objective = [&](const std::vector<double>& y) {
      const Evaluation e = ctx.kernel(y, ctx.k);
      if (!e.ok) return std::numeric_limits<double>::infinity();
      const double miss = e.q - ctx.q_target;
      return -(e.fbar - weight * miss * miss);
    };
    x = nelder_mead(objective, x, opt.initial_step, opt.max_iterations, opt.spread_tolerance);
    consider(polish(ctx, x));
    weight *= 2.0;
  }
  return best;
}

}  // namespace

PovmParameterization encode_povm(const Povm& p) {
  PovmParameterization out{p.outcomes(), {}};
  out.raw.reserve(8 * p.outcomes());
  for (const auto& op : p.operators) {
    if (op.rows() != 2 || op.cols() != 2) {
      throw Error(ErrorCode::kDimensionMismatch, "parameterized POVMs act on a qubit");
    }
    for (std::size_t idx = 0; idx < 4; ++idx) {
      const Complex z = op.data()[idx];
      out.raw.push_back(z.real());
      out.raw.push_back(z.imag());
    }
  }
  return out;
}

Povm retract_to_povm(const PovmParameterization& p) {
  if (p.k == 0 || p.k > kMaxOutcomes || p.raw.size() != 8 * p.k) {
    throw Error(ErrorCode::kInvalidArgument, "parameterization needs 1..8 operators and 8 reals each");
  }
  OperatorSet ops;
  if (!retract_raw(p.raw, p.k, ops)) {
    throw Error(ErrorCode::kSingularRetraction, "sum of N_j^dagger N_j is singular");
  }
  return to_povm(ops, p.k);
}

Povm retract_povm(const Povm& p) {
  if (p.operators.empty()) throw Error(ErrorCode::kInvalidArgument, "empty POVM");
  const std::size_t dim = p.dim();
  ComplexMatrix s(dim, dim);
  for (const auto& op : p.operators) s += op.adjoint() * op;
  const auto eig = hermitian_eigendecomposition(hermitian_part(s));
  if (!(eig.eigenvalues.front() > kSingularThreshold)) {
    throw Error(ErrorCode::kSingularRetraction, "sum of N_j^dagger N_j is singular");
  }
  ComplexMatrix inv_sqrt(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double w = 1.0 / std::sqrt(eig.eigenvalues[k]);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        inv_sqrt(i, j) += w * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
      }
    }
  }
  Povm out;
  for (const auto& op : p.operators) out.operators.push_back(op * inv_sqrt);
  return out;
}

Povm sample_povm(std::size_t dim, std::size_t k, std::mt19937_64& rng) {
  if (dim == 0 || k == 0) throw Error(ErrorCode::kInvalidArgument, "sample_povm needs dim, k >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  Povm p;
  for (std::size_t j = 0; j < k; ++j) {
    ComplexMatrix op(dim, dim);
    for (auto& z : op.data()) z = Complex(normal(rng), normal(rng));
    p.operators.push_back(std::move(op));
  }
  return retract_povm(p);
}

double diagonal_weight(const Povm& p) {
  double s = 0.0;
  for (const auto& op : p.operators) s += std::norm(op(0, 0)) + std::norm(op(1, 1));
  return s;
}

double diagonal_coherence(const Povm& p) {
  double s = 0.0;
  for (const auto& op : p.operators) s += 2.0 * (op(0, 0) * std::conj(op(1, 1))).real();
  return s;
}

OptimizationResult maximize_fidelity(const SealScheme& s, double q_target, const OptimizerOptions& options) {
  if (s.dim_b != 2) throw Error(ErrorCode::kInvalidArgument, "the optimizer searches qubit public factors only");
  if (options.outcomes < 2 || options.outcomes > kMaxOutcomes) {
    throw Error(ErrorCode::kInvalidArgument, "outcome count must lie in [2, 8]");
  }
  if (options.restarts < 1) throw Error(ErrorCode::kInvalidArgument, "at least one restart is required");
  if (options.penalty_rounds < 1 || options.max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "penalty rounds and iteration cap must be positive");
  }

  const SchemeAnalysis analysis = analyze_scheme(s);
  const HelstromDecomposition helstrom = helstrom_decomposition(analysis.rho0, analysis.rho1);
  const double q_max = analysis.q_max;
  if (!(q_target >= 0.0 && q_target <= q_max + kGainSlack)) {
    throw Error(ErrorCode::kQOutOfRange,
                "q = " + std::to_string(q_target) + " outside [0, " + std::to_string(q_max) + "]");
  }
  if (q_max > 0.0 && gain_ratio(q_target, q_max) == 1.0) q_target = q_max;

  const std::size_t k = options.outcomes;
  const SearchContext ctx{FidelityKernel(analysis.rho0, analysis.rho1),
                          k,
                          q_target,
                          padded_raw(build_attack(helstrom, q_max, q_max), k),
                          padded_raw(build_attack(helstrom, 0.0, q_max), k),
                          padded_raw(build_attack(helstrom, q_target, q_max), k),
                          options};

  std::vector<Candidate> found(options.restarts);
  const auto n = static_cast<std::ptrdiff_t>(options.restarts);
  if (options.execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) found[static_cast<std::size_t>(i)] = run_restart(ctx, static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) found[static_cast<std::size_t>(i)] = run_restart(ctx, static_cast<std::size_t>(i));
  }

  OptimizationResult result;
  result.q_target = q_target;
  result.q_max = q_max;
  result.bound = fbar_minmax(q_target, q_max);
  result.restarts_used = options.restarts;
  result.restarts.resize(options.restarts);
  bool have_best = false;
  for (std::size_t i = 0; i < found.size(); ++i) {
    RestartOutcome& r = result.restarts[i];
    r.index = i;
    if (!found[i].feasible) continue;
    // Everything reported is re-evaluated through the generic routines.
    r.povm = retract_to_povm(PovmParameterization{k, found[i].raw});
    r.fbar = average_fidelity(s, r.povm);
    r.achieved_q = classical_l1(r.povm, analysis.rho0, analysis.rho1);
    r.feasible = std::abs(r.achieved_q - q_target) <= options.feasibility_tolerance;
    if (!r.feasible) continue;
    ++result.feasible_restarts;
    if (!have_best || r.fbar > result.best_fbar) {
      have_best = true;
      result.best_fbar = r.fbar;
      result.best_povm = r.povm;
      result.achieved_q = r.achieved_q;
      result.best_restart = i;
    }
  }
  if (!have_best) {
    throw Error(ErrorCode::kNoFeasiblePoint, "no restart reached |q - " + std::to_string(q_target) +
                                                 "| <= " + std::to_string(options.feasibility_tolerance));
  }
  result.gap_to_bound = result.best_fbar - result.bound;
  return result;
}

namespace {

std::string describe(const Povm& p) {
  std::ostringstream os;
  os.precision(17);
  os << "{";
  for (std::size_t j = 0; j < p.outcomes(); ++j) {
    const auto& op = p.operators[j];
    os << (j == 0 ? "" : ", ") << "[[" << op(0, 0) << ", " << op(0, 1) << "], [" << op(1, 0) << ", " << op(1, 1)
       << "]]";
  }
  os << "}";
  return os.str();
}

[[noreturn]] void violation(double q, const std::string& what, const Povm& p) {
  std::ostringstream os;
  os.precision(17);
  os << "q = " << q << ": " << what << " for POVM " << describe(p);
  throw Error(ErrorCode::kBoundViolation, os.str());
}

}  // namespace

BoundReport verify_bound(double q_max, const std::vector<double>& q_grid, const OptimizerOptions& options) {
  const SealScheme scheme = make_stringent_scheme(q_max);
  BoundReport report{q_max, {}};
  for (double q : q_grid) {
    if (!(q > 0.0 && q <= q_max)) {
      throw Error(ErrorCode::kQOutOfRange, "grid point " + std::to_string(q) + " outside (0, q_max]");
    }
    const OptimizationResult r = maximize_fidelity(scheme, q, options);
    BoundCheck check;
    check.q = q;
    check.bound = r.bound;
    check.best_fbar = r.best_fbar;
    check.gap_to_bound = r.gap_to_bound;
    check.achieved_q = r.achieved_q;
    check.feasible_restarts = r.feasible_restarts;
    check.warm_start_fbar = (options.warm_start && r.restarts.front().feasible)
                                ? r.restarts.front().fbar
                                : std::numeric_limits<double>::quiet_NaN();
    check.max_coherence_excess = -std::numeric_limits<double>::infinity();
    for (const RestartOutcome& o : r.restarts) {
      if (!o.feasible) continue;
      if (o.fbar > r.bound + kBoundTolerance) {
        violation(q, "fidelity " + std::to_string(o.fbar) + " above bound " + std::to_string(r.bound), o.povm);
      }
      const double weight = diagonal_weight(o.povm);
      const double ratio = gain_ratio(o.achieved_q, q_max);
      const double excess = diagonal_coherence(o.povm) - 2.0 * std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
      if (weight > 2.0 + kCompletenessTolerance) violation(q, "diagonal weight exceeds 2", o.povm);
      if (excess > kBoundTolerance) violation(q, "diagonal coherence exceeds its bound", o.povm);
      check.max_diagonal_weight = std::max(check.max_diagonal_weight, weight);
      check.max_coherence_excess = std::max(check.max_coherence_excess, excess);
    }
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace qseal
