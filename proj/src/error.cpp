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

#include "qseal/error.hpp"

namespace qseal {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kInvalidDensityMatrix: return "InvalidDensityMatrix";
    case ErrorCode::kQmaxOutOfRange: return "QmaxOutOfRange";
    case ErrorCode::kQmaxZero: return "QmaxZero";
    case ErrorCode::kQOutOfRange: return "QOutOfRange";
    case ErrorCode::kParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::kWrongOutcomeCount: return "WrongOutcomeCount";
    case ErrorCode::kSingularRetraction: return "SingularRetraction";
    case ErrorCode::kNoFeasiblePoint: return "NoFeasiblePoint";
    case ErrorCode::kBoundViolation: return "BoundViolation";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNormalizationError: return "NormalizationError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qseal
