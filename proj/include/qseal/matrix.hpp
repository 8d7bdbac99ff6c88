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

// Dense complex linear algebra at desk scale (dimension <= 64).
//
// Bipartite index convention, used everywhere in the library: a basis state
// |b>_B (x) |a>_A of a system with factor dimensions (dim_b, dim_a) sits at
// global index b * dim_a + a. The public factor B is the major index.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qseal {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(1, 1) {}
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

/// max_ij |a_ij - b_ij|; throws DimensionMismatch on shape disagreement.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |h_ij - conj(h_ji)|, or +inf for non-square input.
double hermiticity_error(const ComplexMatrix& h);

/// (h + h^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& h);

class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t dim) : amplitudes_(dim) {}
  StateVector(std::initializer_list<Complex> amplitudes) : amplitudes_(amplitudes) {}
  explicit StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {}

  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

  double norm() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<Complex> amplitudes_;
};

/// <u|v>, antilinear in the first argument.
Complex inner_product(const StateVector& u, const StateVector& v);

/// |psi><psi|.
ComplexMatrix outer_product(const StateVector& psi);

/// M |psi>.
StateVector apply(const ComplexMatrix& m, const StateVector& psi);

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kDensityTolerance = 1e-8;
inline constexpr int kJacobiSweepBudget = 100;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-12;

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

/// Kronecker product; entry (i_a * rows_b + i_b, j_a * cols_b + j_b).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Cyclic complex Jacobi. Throws NotHermitian when the input deviates from
/// Hermitian by more than kHermitianTolerance and NoConvergence when the
/// off-diagonal mass survives kJacobiSweepBudget sweeps.
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& h);

/// Reduced state on B of a pure bipartite state (B-major, A-minor layout).
ComplexMatrix partial_trace_over_a(const StateVector& state, std::size_t dim_b, std::size_t dim_a);

/// Throws InvalidDensityMatrix unless rho is Hermitian, has unit trace and a
/// spectrum bounded below by -tol.
void validate_density_matrix(const ComplexMatrix& rho, double tol = kDensityTolerance);

/// (1/2) sum_k |lambda_k(rho0 - rho1)|.
double trace_distance(const ComplexMatrix& rho0, const ComplexMatrix& rho1);

}  // namespace qseal
