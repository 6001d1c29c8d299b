// Copyright 2026 The magblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "magblock/errors.hpp"

namespace magblock {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument: return "invalid_argument";
        case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
        case ErrorCode::kNonUniqueSteadyState: return "non_unique_steady_state";
        case ErrorCode::kConvergenceFailure: return "convergence_failure";
        case ErrorCode::kUndefinedCorrelation: return "undefined_correlation";
        case ErrorCode::kBracket: return "bracket_error";
        case ErrorCode::kConfig: return "config_error";
        case ErrorCode::kIo: return "io_error";
        case ErrorCode::kSweepAborted: return "sweep_aborted";
        case ErrorCode::kCheckFailed: return "check_failed";
    }
    return "unknown";
}

}  // namespace magblock
