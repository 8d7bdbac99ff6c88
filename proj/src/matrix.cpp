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

#include "qseal/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qseal/error.hpp"

namespace qseal {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

double max_off_diagonal(const ComplexMatrix& h) {
  double off = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = i + 1; j < h.cols(); ++j) off = std::max(off, std::abs(h(i, j)));
  }
  return off;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product: inner dimensions " +
                                                   std::to_string(a.cols()) + " and " +
                                                   std::to_string(b.rows()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

double hermiticity_error(const ComplexMatrix& h) {
  if (!h.is_square()) return std::numeric_limits<double>::infinity();
  double err = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t j = i; j < h.cols(); ++j) err = std::max(err, std::abs(h(i, j) - std::conj(h(j, i))));
  }
  return err;
}

ComplexMatrix hermitian_part(const ComplexMatrix& h) {
  ComplexMatrix out = h + h.adjoint();
  out *= 0.5;
  return out;
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(ErrorCode::kInvalidArgument, "basis index out of range");
  StateVector v(dim);
  v[index] = 1.0;
  return v;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& z : amplitudes_) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner_product(const StateVector& u, const StateVector& v) {
  if (u.dim() != v.dim()) throw Error(ErrorCode::kDimensionMismatch, "inner product of unequal dimensions");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

ComplexMatrix outer_product(const StateVector& psi) {
  ComplexMatrix m(psi.dim(), psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    for (std::size_t j = 0; j < psi.dim(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  }
  return m;
}

StateVector apply(const ComplexMatrix& m, const StateVector& psi) {
  if (m.cols() != psi.dim()) throw Error(ErrorCode::kDimensionMismatch, "operator/state dimension");
  StateVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * psi[j];
    out[i] = s;
  }
  return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
      }
    }
  }
  return out;
}

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& h) {
  if (!h.is_square()) throw Error(ErrorCode::kDimensionMismatch, "eigendecomposition of non-square matrix");
  const double herm_err = hermiticity_error(h);
  if (herm_err > kHermitianTolerance) {
    throw Error(ErrorCode::kNotHermitian, "asymmetry " + std::to_string(herm_err));
  }

  const std::size_t n = h.rows();
  ComplexMatrix a = hermitian_part(h);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiOffDiagonalTolerance * std::max(1.0, a.max_abs());

  bool converged = false;
  for (int sweep = 0; sweep <= kJacobiSweepBudget; ++sweep) {
    if (max_off_diagonal(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kJacobiSweepBudget) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex hpq = a(p, q);
        const double mag = std::abs(hpq);
        if (mag == 0.0) continue;

        // Phase e^{-i phi} on column q makes the pivot real, then a real
        // rotation annihilates it. Combined 2x2 unitary G on (p, q).
        const Complex phase = hpq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::kNoConvergence,
                "Jacobi exceeded " + std::to_string(kJacobiSweepBudget) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix partial_trace_over_a(const StateVector& state, std::size_t dim_b, std::size_t dim_a) {
  if (dim_b == 0 || dim_a == 0 || state.dim() != dim_b * dim_a) {
    throw Error(ErrorCode::kDimensionMismatch, "state of dimension " + std::to_string(state.dim()) +
                                                   " is not " + std::to_string(dim_b) + " x " +
                                                   std::to_string(dim_a));
  }
  ComplexMatrix rho(dim_b, dim_b);
  for (std::size_t b = 0; b < dim_b; ++b) {
    for (std::size_t bp = 0; bp < dim_b; ++bp) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < dim_a; ++k) s += state[b * dim_a + k] * std::conj(state[bp * dim_a + k]);
      rho(b, bp) = s;
    }
  }
  return rho;
}

void validate_density_matrix(const ComplexMatrix& rho, double tol) {
  if (!rho.is_square()) throw Error(ErrorCode::kInvalidDensityMatrix, "not square");
  if (hermiticity_error(rho) > tol) throw Error(ErrorCode::kInvalidDensityMatrix, "not Hermitian");
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0)) > tol) {
    throw Error(ErrorCode::kInvalidDensityMatrix, "trace " + std::to_string(tr.real()));
  }
  const auto eig = hermitian_eigendecomposition(hermitian_part(rho));
  if (eig.eigenvalues.front() < -tol) {
    throw Error(ErrorCode::kInvalidDensityMatrix,
                "negative eigenvalue " + std::to_string(eig.eigenvalues.front()));
  }
}

double trace_distance(const ComplexMatrix& rho0, const ComplexMatrix& rho1) {
  require_same_shape(rho0, rho1, "trace_distance");
  validate_density_matrix(rho0);
  validate_density_matrix(rho1);
  const auto eig = hermitian_eigendecomposition(hermitian_part(rho0 - rho1));
  double s = 0.0;
  for (double lambda : eig.eigenvalues) s += std::abs(lambda);
  return std::clamp(0.5 * s, 0.0, 1.0);
}

}  // namespace qseal
