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
#include <filesystem>
#include <string>

#include "qseal/matrix.hpp"

namespace qseal {

inline constexpr double kStateNormTolerance = 1e-10;
inline constexpr double kLoadNormTolerance = 1e-8;

/// A bit sealed into one of two bipartite pure states. The B factor is handed
/// to the public, the A factor stays with authorized verifiers. Amplitudes use
/// the library-wide B-major layout (index = b * dim_a + a).
struct SealScheme {
  std::size_t dim_b = 2;
  std::size_t dim_a = 1;
  StateVector psi0;
  StateVector psi1;

  const StateVector& state(int bit) const { return bit == 0 ? psi0 : psi1; }

  friend bool operator==(const SealScheme&, const SealScheme&) = default;
};

/// Throws DimensionMismatch / InvalidArgument / NormalizationError when the
/// scheme breaks its invariants. `norm_tol` bounds | ||psi_i|| - 1 |.
void validate_scheme(const SealScheme& s, double norm_tol = kStateNormTolerance);

/// The stringent scheme: dim_b = 2, dim_a = 3,
///   |psi_i> = sqrt(1 - q_max)/2 { (|0> + (-1)^i |1>)|0>_A + (|0> - (-1)^i |1>)|1>_A }
///             + sqrt(q_max) |i>|2>_A.
/// Both reductions are diag((1 +- q_max)/2) and no reader beats the min-max
/// fidelity bound against it. Throws QmaxOutOfRange unless 0 < q_max <= 1.
SealScheme make_stringent_scheme(double q_max);

/// Two pure qubit states with no private factor:
///   |psi_i> = sqrt((1 + (-1)^i q_max)/2) |0> + sqrt((1 - (-1)^i q_max)/2) |1>.
SealScheme make_product_scheme(double q_max);

struct SchemeAnalysis {
  ComplexMatrix rho0;
  ComplexMatrix rho1;
  double q_max = 0.0;
};

/// Reduced states seen by the public and their trace distance. Unlike the
/// builders, a trace distance of zero is reported rather than rejected.
SchemeAnalysis analyze_scheme(const SealScheme& s);

/// Scheme files are JSON objects with exactly the fields dim_b, dim_a, psi0,
/// psi1; each state is an array of [re, im] pairs in B-major order. Doubles
/// are written in shortest round-trip form so load(save(s)) == s bit-exactly.
std::string scheme_to_string(const SealScheme& s);
SealScheme scheme_from_string(const std::string& text);

void save_scheme(const SealScheme& s, const std::filesystem::path& path);
SealScheme load_scheme(const std::filesystem::path& path);

}  // namespace qseal
