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

#include "qseal/attack.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qseal/error.hpp"

namespace qseal {

namespace {

void require_operators(const Povm& p, std::size_t dim, const char* what) {
  if (p.operators.empty()) throw Error(ErrorCode::kDimensionMismatch, std::string(what) + ": empty POVM");
  for (const auto& op : p.operators) {
    if (op.rows() != dim || op.cols() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, std::string(what) + ": operator is " +
                                                     std::to_string(op.rows()) + "x" +
                                                     std::to_string(op.cols()) + ", expected " +
                                                     std::to_string(dim));
    }
  }
}

// sum_k lambda_k v_k v_k^dagger over the selected eigenpairs.
ComplexMatrix spectral_sum(const EigenDecomposition& eig, double sign, double tol, bool weighted) {
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = sign * eig.eigenvalues[k];
    if (lambda <= tol) continue;
    const double w = weighted ? lambda : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += w * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
      }
    }
  }
  return out;
}

}  // namespace

double gain_ratio(double q, double q_max) {
  const double ratio = std::clamp(q / q_max, 0.0, 1.0);
  return ratio >= 1.0 - kGainSlack ? 1.0 : ratio;
}

HelstromDecomposition helstrom_decomposition(const ComplexMatrix& rho0, const ComplexMatrix& rho1, double tol) {
  if (rho0.rows() != rho1.rows() || rho0.cols() != rho1.cols() || !rho0.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "helstrom_decomposition: states differ in shape");
  }
  const auto eig = hermitian_eigendecomposition(hermitian_part(rho0 - rho1));
  const bool any_signal = std::any_of(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                                      [&](double lambda) { return std::abs(lambda) > tol; });
  if (!any_signal) {
    throw Error(ErrorCode::kQmaxZero, "rho0 - rho1 vanishes; the states cannot be told apart");
  }
  HelstromDecomposition d{spectral_sum(eig, 1.0, tol, true), spectral_sum(eig, -1.0, tol, true),
                          spectral_sum(eig, 1.0, tol, false), ComplexMatrix(1, 1)};
  d.pi1 = ComplexMatrix::identity(rho0.rows()) - d.pi0;
  return d;
}

double completeness_error(const Povm& p) {
  if (p.operators.empty()) throw Error(ErrorCode::kDimensionMismatch, "empty POVM");
  ComplexMatrix sum(p.dim(), p.dim());
  for (const auto& op : p.operators) sum += op.adjoint() * op;
  return max_abs_diff(sum, ComplexMatrix::identity(p.dim()));
}

Povm identity_povm(std::size_t dim) { return Povm{{ComplexMatrix::identity(dim)}}; }

Povm build_attack(const HelstromDecomposition& d, double q, double q_max) {
  if (!(q_max > 0.0)) throw Error(ErrorCode::kQmaxZero, "build_attack needs q_max > 0");
  if (!(q >= 0.0 && q <= q_max + kGainSlack)) {
    throw Error(ErrorCode::kQOutOfRange,
                "q = " + std::to_string(q) + " outside [0, " + std::to_string(q_max) + "]");
  }
  const double ratio = gain_ratio(q, q_max);
  const double strong = std::sqrt(0.5 * (1.0 + ratio));
  const double weak = std::sqrt(0.5 * (1.0 - ratio));
  // Pi1 = I - Pi0, so equal coefficients give exactly I/sqrt(2).
  const ComplexMatrix id = ComplexMatrix::identity(d.pi0.rows());
  return Povm{{weak * id + (strong - weak) * d.pi0, strong * id + (weak - strong) * d.pi0}};
}

std::vector<double> outcome_distribution(const Povm& p, const ComplexMatrix& rho) {
  require_operators(p, rho.rows(), "outcome_distribution");
  if (!rho.is_square()) throw Error(ErrorCode::kDimensionMismatch, "outcome_distribution: state not square");
  std::vector<double> probs;
  probs.reserve(p.outcomes());
  for (const auto& op : p.operators) {
    double pj = ((op.adjoint() * op) * rho).trace().real();
    if (pj < 0.0 && pj >= -1e-12) pj = 0.0;
    probs.push_back(pj);
  }
  return probs;
}

double classical_l1(const Povm& p, const ComplexMatrix& rho0, const ComplexMatrix& rho1) {
  if (rho0.rows() != rho1.rows()) throw Error(ErrorCode::kDimensionMismatch, "classical_l1: state dimensions");
  const auto p0 = outcome_distribution(p, rho0);
  const auto p1 = outcome_distribution(p, rho1);
  double s = 0.0;
  for (std::size_t j = 0; j < p0.size(); ++j) s += std::abs(p0[j] - p1[j]);
  return 0.5 * s;
}

ComplexMatrix apply_channel(const Povm& p, const StateVector& psi, std::size_t dim_b, std::size_t dim_a) {
  if (psi.dim() != dim_b * dim_a) throw Error(ErrorCode::kDimensionMismatch, "apply_channel: state dimension");
  require_operators(p, dim_b, "apply_channel");
  const ComplexMatrix id_a = ComplexMatrix::identity(dim_a);
  ComplexMatrix out(psi.dim(), psi.dim());
  for (const auto& op : p.operators) out += outer_product(apply(tensor_product(op, id_a), psi));
  return out;
}

Complex public_expectation(const ComplexMatrix& op, const StateVector& psi, std::size_t dim_b,
                           std::size_t dim_a) {
  if (psi.dim() != dim_b * dim_a || op.rows() != dim_b || op.cols() != dim_b) {
    throw Error(ErrorCode::kDimensionMismatch, "public_expectation: operator/state dimensions");
  }
  Complex s = 0.0;
  for (std::size_t b = 0; b < dim_b; ++b) {
    for (std::size_t bp = 0; bp < dim_b; ++bp) {
      const Complex m = op(b, bp);
      if (m == Complex(0.0)) continue;
      for (std::size_t a = 0; a < dim_a; ++a) s += std::conj(psi[b * dim_a + a]) * m * psi[bp * dim_a + a];
    }
  }
  return s;
}

double guess_probability(const SealScheme& s, const Povm& p) {
  if (p.outcomes() != 2) {
    throw Error(ErrorCode::kWrongOutcomeCount,
                "guessing needs 2 outcomes, POVM has " + std::to_string(p.outcomes()));
  }
  require_operators(p, s.dim_b, "guess_probability");
  double total = 0.0;
  for (int bit = 0; bit < 2; ++bit) {
    const auto& m = p.operators[static_cast<std::size_t>(bit)];
    total += public_expectation(m.adjoint() * m, s.state(bit), s.dim_b, s.dim_a).real();
  }
  return 0.5 * total;
}

OverlapReport overlap_report(const SealScheme& s, const HelstromDecomposition& d) {
  if (d.pi0.rows() != s.dim_b) throw Error(ErrorCode::kDimensionMismatch, "overlap_report: projector dimension");
  const double q_max = d.q0.trace().real();
  OverlapReport r;
  r.a = public_expectation(d.pi0, s.psi0, s.dim_b, s.dim_a).real();
  r.one_minus_a = public_expectation(d.pi1, s.psi0, s.dim_b, s.dim_a).real();
  r.a_minus_qmax = public_expectation(d.pi0, s.psi1, s.dim_b, s.dim_a).real();
  r.complement = public_expectation(d.pi1, s.psi1, s.dim_b, s.dim_a).real();
  r.expected_one_minus_a = 1.0 - r.a;
  r.expected_a_minus_qmax = r.a - q_max;
  r.expected_complement = 1.0 - r.a + q_max;
  return r;
}

}  // namespace qseal
