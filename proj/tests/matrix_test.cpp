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

#include <cmath>
#include <functional>
#include <random>

#include "gtest/gtest.h"
#include "qseal/error.hpp"
#include "test_util.hpp"

namespace qseal {
namespace {

using testing::random_density;
using testing::random_hermitian;
using testing::random_matrix;
using testing::random_state;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a qseal::Error";
  return ErrorCode::kInvalidArgument;
}

TEST(TensorProduct, IdentityTimesIdentity) {
  EXPECT_EQ(tensor_product(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
}

TEST(TensorProduct, ProjectorExtension) {
  EXPECT_EQ(tensor_product(ComplexMatrix::diagonal({1, 0}), ComplexMatrix::identity(2)),
            ComplexMatrix::diagonal({1, 1, 0, 0}));
}

TEST(TensorProduct, PauliXTimesScalar) {
  const ComplexMatrix x{{0, 1}, {1, 0}};
  const ComplexMatrix two{{2}};
  EXPECT_EQ(tensor_product(x, two), (ComplexMatrix{{0, 2}, {2, 0}}));
}

TEST(TensorProduct, IndexConvention) {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = random_matrix(2, 3, rng);
  const ComplexMatrix b = random_matrix(3, 2, rng);
  const ComplexMatrix k = tensor_product(a, b);
  ASSERT_EQ(k.rows(), 6u);
  ASSERT_EQ(k.cols(), 6u);
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t ja = 0; ja < 3; ++ja)
      for (std::size_t ib = 0; ib < 3; ++ib)
        for (std::size_t jb = 0; jb < 2; ++jb) EXPECT_EQ(k(ia * 3 + ib, ja * 2 + jb), a(ia, ja) * b(ib, jb));
}

TEST(TensorProduct, LocalOperatorsCommuteIntoProduct) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_matrix(2, 2, rng);
    const ComplexMatrix b = random_matrix(3, 3, rng);
    const ComplexMatrix lhs = tensor_product(a, ComplexMatrix::identity(3)) * tensor_product(ComplexMatrix::identity(2), b);
    EXPECT_LE(max_abs_diff(lhs, tensor_product(a, b)), 1e-12);
  }
}

TEST(Eigen, AlreadyDiagonal) {
  const auto eig = hermitian_eigendecomposition(ComplexMatrix::diagonal({0.3, -0.3}));
  ASSERT_EQ(eig.eigenvalues.size(), 2u);
  EXPECT_DOUBLE_EQ(eig.eigenvalues[0], -0.3);
  EXPECT_DOUBLE_EQ(eig.eigenvalues[1], 0.3);
}

TEST(Eigen, PauliX) {
  // Characteristic polynomial lambda^2 - 1.
  const auto eig = hermitian_eigendecomposition(ComplexMatrix{{0, 1}, {1, 0}});
  EXPECT_NEAR(eig.eigenvalues[0], -1.0, 1e-14);
  EXPECT_NEAR(eig.eigenvalues[1], 1.0, 1e-14);
  const double s = 1.0 / std::sqrt(2.0);
  const StateVector minus{s, -s};
  const StateVector plus{s, s};
  const StateVector v0{eig.eigenvectors(0, 0), eig.eigenvectors(1, 0)};
  const StateVector v1{eig.eigenvectors(0, 1), eig.eigenvectors(1, 1)};
  EXPECT_NEAR(std::abs(inner_product(minus, v0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(inner_product(plus, v1)), 1.0, 1e-12);
}

void expect_valid_decomposition(const ComplexMatrix& h) {
  const auto eig = hermitian_eigendecomposition(h);
  const std::size_t n = h.rows();
  ComplexMatrix lambda(n, n);
  for (std::size_t k = 0; k < n; ++k) lambda(k, k) = eig.eigenvalues[k];
  const ComplexMatrix& v = eig.eigenvectors;
  EXPECT_LE(max_abs_diff(h, v * lambda * v.adjoint()), 1e-10 * std::max(1.0, h.max_abs()));
  EXPECT_LE(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(n)), 1e-10);
  for (std::size_t k = 1; k < n; ++k) EXPECT_LE(eig.eigenvalues[k - 1], eig.eigenvalues[k]);
}

TEST(Eigen, RandomHermitianReconstruction) {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 8u, 8u, 16u}) expect_valid_decomposition(random_hermitian(n, rng));
}

TEST(Eigen, DeskScaleCeiling) {
  std::mt19937_64 rng(64);
  expect_valid_decomposition(random_hermitian(64, rng));
}

TEST(Eigen, DegenerateSpectrum) {
  std::mt19937_64 rng(5);
  // U diag(1, 1, -2, -2) U^dagger with a random unitary from a Hermitian eigenbasis.
  const auto basis = hermitian_eigendecomposition(random_hermitian(4, rng)).eigenvectors;
  const ComplexMatrix h = basis * ComplexMatrix::diagonal({1, 1, -2, -2}) * basis.adjoint();
  expect_valid_decomposition(hermitian_part(h));
}

TEST(Eigen, RejectsNonHermitian) {
  EXPECT_EQ(code_of([] { hermitian_eigendecomposition(ComplexMatrix{{0, 1}, {0, 0}}); }), ErrorCode::kNotHermitian);
  EXPECT_EQ(code_of([] { hermitian_eigendecomposition(ComplexMatrix(2, 3)); }), ErrorCode::kDimensionMismatch);
}

TEST(PartialTrace, ProductState) {
  const ComplexMatrix rho = partial_trace_over_a(StateVector::basis(4, 0), 2, 2);
  EXPECT_EQ(rho, ComplexMatrix::diagonal({1, 0}));
}

TEST(PartialTrace, BellState) {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMatrix rho = partial_trace_over_a(StateVector{s, 0, 0, s}, 2, 2);
  EXPECT_LE(max_abs_diff(rho, ComplexMatrix::diagonal({0.5, 0.5})), 1e-15);
}

TEST(PartialTrace, StringentAmplitudes) {
  // sqrt(0.4)/2 on |00>,|10>,|01>,-|11>; sqrt(0.6) on |0>|2>. Label b=0
  // collects 0.1 + 0.1 + 0.6, label b=1 collects 0.1 + 0.1.
  const double w = std::sqrt(0.4) / 2.0;
  const StateVector psi{w, w, std::sqrt(0.6), w, -w, 0.0};
  const ComplexMatrix rho = partial_trace_over_a(psi, 2, 3);
  EXPECT_LE(max_abs_diff(rho, ComplexMatrix::diagonal({0.8, 0.2})), 1e-15);
}

TEST(PartialTrace, PreservesTraceAndPositivity) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t db = 2 + trial % 3;
    const std::size_t da = 1 + trial % 4;
    StateVector psi = random_state(db * da, rng);
    const ComplexMatrix rho = partial_trace_over_a(psi, db, da);
    EXPECT_NEAR(rho.trace().real(), psi.norm() * psi.norm(), 1e-10);
    EXPECT_LE(hermiticity_error(rho), 1e-12);
    EXPECT_GE(hermitian_eigendecomposition(rho).eigenvalues.front(), -1e-12);
  }
}

TEST(PartialTrace, DimensionMismatch) {
  EXPECT_EQ(code_of([] { partial_trace_over_a(StateVector(5), 2, 3); }), ErrorCode::kDimensionMismatch);
}

TEST(TraceDistance, Examples) {
  const ComplexMatrix rho = ComplexMatrix::diagonal({0.3, 0.7});
  EXPECT_DOUBLE_EQ(trace_distance(rho, rho), 0.0);
  EXPECT_NEAR(trace_distance(ComplexMatrix::diagonal({1, 0}), ComplexMatrix::diagonal({0, 1})), 1.0, 1e-15);
  EXPECT_NEAR(trace_distance(ComplexMatrix::diagonal({0.8, 0.2}), ComplexMatrix::diagonal({0.2, 0.8})), 0.6, 1e-15);
}

TEST(TraceDistance, MetricProperties) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const ComplexMatrix a = random_density(n, rng, 1 + trial % n);
    const ComplexMatrix b = random_density(n, rng);
    const ComplexMatrix c = random_density(n, rng);
    const double ab = trace_distance(a, b);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_NEAR(ab, trace_distance(b, a), 1e-9);
    EXPECT_LE(trace_distance(a, c), ab + trace_distance(b, c) + 1e-9);
  }
}

TEST(TraceDistance, Errors) {
  EXPECT_EQ(code_of([] { trace_distance(ComplexMatrix::identity(2), ComplexMatrix::identity(3)); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { trace_distance(ComplexMatrix::diagonal({0.5, 0.4}), ComplexMatrix::diagonal({1, 0})); }),
            ErrorCode::kInvalidDensityMatrix);
  EXPECT_EQ(code_of([] { trace_distance(ComplexMatrix::diagonal({1.1, -0.1}), ComplexMatrix::diagonal({1, 0})); }),
            ErrorCode::kInvalidDensityMatrix);
}

}  // namespace
}  // namespace qseal
