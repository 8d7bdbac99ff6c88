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

#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "qseal/error.hpp"
#include "qseal/optimizer.hpp"
#include "test_util.hpp"

namespace qseal {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a qseal::Error";
  return ErrorCode::kInvalidArgument;
}

const ComplexMatrix kRho0 = ComplexMatrix::diagonal({0.8, 0.2});
const ComplexMatrix kRho1 = ComplexMatrix::diagonal({0.2, 0.8});

double rank_of_projector(const ComplexMatrix& p) { return p.trace().real(); }

void expect_helstrom_invariants(const ComplexMatrix& rho0, const ComplexMatrix& rho1,
                                const HelstromDecomposition& d) {
  const std::size_t n = rho0.rows();
  const ComplexMatrix zero(n, n);
  EXPECT_LE(max_abs_diff(rho0 - rho1, d.q0 - d.q1), 1e-10);
  EXPECT_LE(max_abs_diff(d.q0 * d.q1, zero), 1e-10);
  EXPECT_LE(max_abs_diff(d.pi0 * d.q0, d.q0), 1e-10);
  EXPECT_LE(max_abs_diff(d.pi0 * d.q1, zero), 1e-10);
  EXPECT_LE(max_abs_diff(d.pi1, ComplexMatrix::identity(n) - d.pi0), 1e-10);
  EXPECT_LE(max_abs_diff(d.pi0 * d.pi0, d.pi0), 1e-10);
  EXPECT_LE(hermiticity_error(d.pi0), 1e-10);
}

TEST(Helstrom, DiagonalPair) {
  const HelstromDecomposition d = helstrom_decomposition(kRho0, kRho1);
  EXPECT_LE(max_abs_diff(d.pi0, ComplexMatrix::diagonal({1, 0})), 1e-15);
  EXPECT_LE(max_abs_diff(d.pi1, ComplexMatrix::diagonal({0, 1})), 1e-15);
  EXPECT_LE(max_abs_diff(d.q0, ComplexMatrix::diagonal({0.6, 0})), 1e-15);
  EXPECT_LE(max_abs_diff(d.q1, ComplexMatrix::diagonal({0, 0.6})), 1e-15);
}

TEST(Helstrom, IdenticalStatesHaveNoProjectors) {
  EXPECT_EQ(code_of([] { helstrom_decomposition(kRho0, kRho0); }), ErrorCode::kQmaxZero);
}

TEST(Helstrom, KernelJoinsPi1) {
  // Difference diag(0.5, 0, -0.5).
  const ComplexMatrix rho0 = ComplexMatrix::diagonal({0.6, 0.3, 0.1});
  const ComplexMatrix rho1 = ComplexMatrix::diagonal({0.1, 0.3, 0.6});
  const HelstromDecomposition d = helstrom_decomposition(rho0, rho1);
  EXPECT_NEAR(rank_of_projector(d.pi0), 1.0, 1e-12);
  EXPECT_NEAR(rank_of_projector(d.pi1), 2.0, 1e-12);
  EXPECT_NEAR(d.pi1(1, 1).real(), 1.0, 1e-12);
  expect_helstrom_invariants(rho0, rho1, d);
}

TEST(Helstrom, InvariantsOnRandomPairs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const ComplexMatrix rho0 = testing::random_density(n, rng, 1 + trial % n);
    const ComplexMatrix rho1 = testing::random_density(n, rng, 1 + (trial / 2) % n);
    const HelstromDecomposition d = helstrom_decomposition(rho0, rho1);
    expect_helstrom_invariants(rho0, rho1, d);
    EXPECT_NEAR(d.q0.trace().real(), trace_distance(rho0, rho1), 1e-10);
    EXPECT_NEAR(classical_l1(Povm{{d.pi0, d.pi1}}, rho0, rho1), trace_distance(rho0, rho1), 1e-10);
  }
}

TEST(BuildAttack, HelstromEndpoint) {
  const HelstromDecomposition d = helstrom_decomposition(kRho0, kRho1);
  const Povm p = build_attack(d, 0.6, 0.6);
  ASSERT_EQ(p.outcomes(), 2u);
  EXPECT_LE(max_abs_diff(p.operators[0], d.pi0), 1e-15);
  EXPECT_LE(max_abs_diff(p.operators[1], d.pi1), 1e-15);
}

TEST(BuildAttack, ZeroGainIsIdentityChannel) {
  const HelstromDecomposition d = helstrom_decomposition(kRho0, kRho1);
  const Povm p = build_attack(d, 0.0, 0.6);
  const ComplexMatrix half = (1.0 / std::sqrt(2.0)) * ComplexMatrix::identity(2);
  EXPECT_LE(max_abs_diff(p.operators[0], half), 1e-15);
  EXPECT_LE(max_abs_diff(p.operators[1], half), 1e-15);
  const SealScheme s = make_stringent_scheme(0.6);
  EXPECT_LE(max_abs_diff(apply_channel(p, s.psi0, 2, 3), outer_product(s.psi0)), 1e-15);
}

TEST(BuildAttack, Coefficients) {
  const HelstromDecomposition d = helstrom_decomposition(kRho0, kRho1);
  const Povm p = build_attack(d, 0.3, 0.6);
  EXPECT_NEAR(p.operators[0](0, 0).real(), std::sqrt(0.75), 1e-15);
  EXPECT_NEAR(p.operators[0](1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(p.operators[1](0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(p.operators[1](1, 1).real(), std::sqrt(0.75), 1e-15);
  EXPECT_LE(completeness_error(p), 1e-12);
}

TEST(BuildAttack, RejectsOutOfRangeGain) {
  const HelstromDecomposition d = helstrom_decomposition(kRho0, kRho1);
  EXPECT_EQ(code_of([&] { build_attack(d, -0.01, 0.6); }), ErrorCode::kQOutOfRange);
  EXPECT_EQ(code_of([&] { build_attack(d, 0.61, 0.6); }), ErrorCode::kQOutOfRange);
  EXPECT_EQ(code_of([&] { build_attack(d, 0.0, 0.0); }), ErrorCode::kQmaxZero);
}

TEST(BuildAttack, CompletenessOnRandomDecompositions) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const ComplexMatrix rho0 = testing::random_density(n, rng);
    const ComplexMatrix rho1 = testing::random_density(n, rng);
    const double q_max = trace_distance(rho0, rho1);
    const HelstromDecomposition d = helstrom_decomposition(rho0, rho1);
    const Povm p = build_attack(d, unit(rng) * q_max, q_max);
    EXPECT_LE(completeness_error(p), 1e-12);
  }
}

TEST(OutcomeDistribution, Examples) {
  const auto id = outcome_distribution(identity_povm(2), kRho0);
  ASSERT_EQ(id.size(), 1u);
  EXPECT_NEAR(id[0], 1.0, 1e-15);

  const HelstromDecomposition d = helstrom_decomposition(kRho0, kRho1);
  const auto helstrom = outcome_distribution(build_attack(d, 0.6, 0.6), kRho0);
  EXPECT_NEAR(helstrom[0], 0.8, 1e-15);
  EXPECT_NEAR(helstrom[1], 0.2, 1e-15);

  // 0.75 * 0.8 + 0.25 * 0.2 and 0.25 * 0.8 + 0.75 * 0.2
  const auto attack = outcome_distribution(build_attack(d, 0.3, 0.6), kRho0);
  EXPECT_NEAR(attack[0], 0.65, 1e-15);
  EXPECT_NEAR(attack[1], 0.35, 1e-15);
}

TEST(OutcomeDistribution, ProbabilitiesAreNormalized) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const Povm p = sample_povm(n, 2 + trial % 5, rng);
    const auto probs = outcome_distribution(p, testing::random_density(n, rng));
    double sum = 0.0;
    for (double pj : probs) {
      EXPECT_GE(pj, -1e-12);
      EXPECT_LE(pj, 1.0 + 1e-12);
      sum += pj;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(OutcomeDistribution, DimensionMismatch) {
  EXPECT_EQ(code_of([] { outcome_distribution(identity_povm(3), kRho0); }), ErrorCode::kDimensionMismatch);
}

TEST(ClassicalL1, Examples) {
  const SchemeAnalysis a = analyze_scheme(make_stringent_scheme(0.6));
  const HelstromDecomposition d = helstrom_decomposition(a.rho0, a.rho1);
  EXPECT_DOUBLE_EQ(classical_l1(identity_povm(2), a.rho0, a.rho1), 0.0);
  EXPECT_NEAR(classical_l1(build_attack(d, 0.6, 0.6), a.rho0, a.rho1), 0.6, 1e-15);
  EXPECT_NEAR(classical_l1(build_attack(d, 0.3, 0.6), a.rho0, a.rho1), 0.3, 1e-15);
}

TEST(ClassicalL1, AttackRealizesRequestedGain) {
  for (const SealScheme& s : {make_stringent_scheme(0.45), make_product_scheme(0.45), make_stringent_scheme(0.9),
                              make_product_scheme(0.9)}) {
    const SchemeAnalysis a = analyze_scheme(s);
    const HelstromDecomposition d = helstrom_decomposition(a.rho0, a.rho1);
    for (int t = 0; t <= 4; ++t) {
      const double q = a.q_max * t / 4.0;
      EXPECT_NEAR(classical_l1(build_attack(d, q, a.q_max), a.rho0, a.rho1), q, 1e-9);
    }
  }
}

TEST(ClassicalL1, NeverExceedsTraceDistance) {
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const ComplexMatrix rho0 = testing::random_density(n, rng, 1 + trial % n);
    const ComplexMatrix rho1 = testing::random_density(n, rng);
    const Povm p = sample_povm(n, 2 + trial % 7, rng);
    EXPECT_LE(classical_l1(p, rho0, rho1), trace_distance(rho0, rho1) + 1e-9);
  }
}

TEST(ApplyChannel, IdentityLeavesStateAlone) {
  const SealScheme s = make_stringent_scheme(0.3);
  EXPECT_LE(max_abs_diff(apply_channel(identity_povm(2), s.psi1, 2, 3), outer_product(s.psi1)), 1e-15);
}

TEST(ApplyChannel, HelstromOnStringentScheme) {
  const SealScheme s = make_stringent_scheme(0.6);
  const SchemeAnalysis a = analyze_scheme(s);
  const Povm p = build_attack(helstrom_decomposition(a.rho0, a.rho1), 0.6, 0.6);
  const ComplexMatrix out = apply_channel(p, s.psi0, 2, 3);
  EXPECT_NEAR(out.trace().real(), 1.0, 1e-9);
  EXPECT_GE(hermitian_eigendecomposition(hermitian_part(out)).eigenvalues.front(), -1e-9);
  // 0.8^2 + 0.2^2
  EXPECT_NEAR(inner_product(s.psi0, apply(out, s.psi0)).real(), 0.68, 1e-12);
}

TEST(ApplyChannel, TraceAndPositivityOnRandomInputs) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t db = 2 + trial % 2;
    const std::size_t da = 1 + trial % 3;
    const StateVector psi = testing::random_state(db * da, rng);
    const ComplexMatrix out = apply_channel(sample_povm(db, 3, rng), psi, db, da);
    EXPECT_NEAR(out.trace().real(), 1.0, 1e-9);
    EXPECT_GE(hermitian_eigendecomposition(hermitian_part(out)).eigenvalues.front(), -1e-9);
  }
}

TEST(ApplyChannel, DimensionMismatch) {
  EXPECT_EQ(code_of([] { apply_channel(identity_povm(2), StateVector(5), 2, 3); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { apply_channel(identity_povm(3), StateVector(6), 2, 3); }), ErrorCode::kDimensionMismatch);
}

TEST(GuessProbability, StringentExamples) {
  const SealScheme s = make_stringent_scheme(0.6);
  const SchemeAnalysis a = analyze_scheme(s);
  const HelstromDecomposition d = helstrom_decomposition(a.rho0, a.rho1);
  EXPECT_NEAR(guess_probability(s, build_attack(d, 0.0, 0.6)), 0.5, 1e-15);
  EXPECT_NEAR(guess_probability(s, build_attack(d, 0.3, 0.6)), 0.65, 1e-15);
  EXPECT_NEAR(guess_probability(s, build_attack(d, 0.6, 0.6)), 0.8, 1e-15);
}

TEST(GuessProbability, EqualsHalfOnePlusGain) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double q_max = 0.05 + 0.95 * unit(rng);
    const double q = q_max * unit(rng);
    for (const SealScheme& s : {make_stringent_scheme(q_max), make_product_scheme(q_max)}) {
      const SchemeAnalysis a = analyze_scheme(s);
      const Povm p = build_attack(helstrom_decomposition(a.rho0, a.rho1), q, a.q_max);
      EXPECT_NEAR(guess_probability(s, p), (1.0 + q) / 2.0, 1e-10);
    }
  }
}

TEST(GuessProbability, NeedsTwoOutcomes) {
  const SealScheme s = make_product_scheme(0.5);
  EXPECT_EQ(code_of([&] { guess_probability(s, identity_povm(2)); }), ErrorCode::kWrongOutcomeCount);
}

TEST(OverlapReport, BuiltinSchemesForceHalfOnePlusQmax) {
  for (const SealScheme& s : {make_product_scheme(0.6), make_stringent_scheme(0.6)}) {
    const SchemeAnalysis a = analyze_scheme(s);
    const OverlapReport r = overlap_report(s, helstrom_decomposition(a.rho0, a.rho1));
    EXPECT_NEAR(r.a, 0.8, 1e-12);
    EXPECT_NEAR(r.one_minus_a, 0.2, 1e-12);
    EXPECT_NEAR(r.a_minus_qmax, 0.2, 1e-12);
    EXPECT_NEAR(r.complement, 0.8, 1e-12);
  }
}

TEST(OverlapReport, PerfectSeal) {
  const SealScheme s = make_stringent_scheme(1.0);
  const SchemeAnalysis a = analyze_scheme(s);
  EXPECT_NEAR(overlap_report(s, helstrom_decomposition(a.rho0, a.rho1)).a, 1.0, 1e-12);
}

TEST(OverlapReport, ConsequenceIdentitiesOnRandomSchemes) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t db = 2 + trial % 3;
    const std::size_t da = 1 + trial % 4;
    const SealScheme s{db, da, testing::random_state(db * da, rng), testing::random_state(db * da, rng)};
    const SchemeAnalysis a = analyze_scheme(s);
    const OverlapReport r = overlap_report(s, helstrom_decomposition(a.rho0, a.rho1));
    EXPECT_NEAR(r.one_minus_a, r.expected_one_minus_a, 1e-9);
    EXPECT_NEAR(r.a_minus_qmax, r.expected_a_minus_qmax, 1e-9);
    EXPECT_NEAR(r.complement, r.expected_complement, 1e-9);
    EXPECT_GE(r.a, a.q_max - 1e-10);
    EXPECT_LE(r.a, 1.0 + 1e-10);
  }
}

TEST(GainRatio, SnapsRoundingAtTheTop) {
  EXPECT_EQ(gain_ratio(0.3, 0.6), 0.5);
  EXPECT_EQ(gain_ratio(0.6 * (1 + 1e-15), 0.6), 1.0);
  EXPECT_EQ(gain_ratio(0.6 * (1 - 1e-14), 0.6), 1.0);
  EXPECT_LT(gain_ratio(0.6 * (1 - 1e-9), 0.6), 1.0);
  EXPECT_EQ(gain_ratio(0.0, 0.6), 0.0);
}

}  // namespace
}  // namespace qseal
