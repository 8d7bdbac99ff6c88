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

#include <iosfwd>
#include <string>
#include <vector>

#include "qseal/error.hpp"

namespace qseal::cli {

/// Process exit codes. Scripts branch on these, so they are fixed.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kBadArgument = 2,
  kIoFailure = 3,
  kDegenerateScheme = 4,
  kBoundViolated = 5,
  kInfeasible = 6,
};

int exit_code_for(ErrorCode code);

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qseal::cli
