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

#include <string>
#include <vector>

#include "magblock/liouvillian.hpp"

namespace magblock {

struct CheckOutcome {
    std::string name;
    bool passed;
    std::string detail;
};

/// Invariant suite run by `magblock check`: operator algebra, Liouvillian
/// structure, steady-state physicality and solver agreement at p, plus the
/// analytic reference states.
std::vector<CheckOutcome> run_self_checks(const SystemParams& p);

}  // namespace magblock
