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

#pragma once

#include <exception>
#include <ostream>

#include "magblock/config.hpp"

namespace magblock {

/// Executes one configured run. Results go to config.output_path, or to
/// `out` when no path is set. Errors are written to `err` as a single JSON
/// line and mapped to the exit code of their ErrorCode (1 for anything
/// unexpected).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes the machine-readable error line and returns its exit code.
int report_error(const std::exception& error, std::ostream& err);

}  // namespace magblock
