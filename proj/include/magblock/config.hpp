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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magblock/liouvillian.hpp"
#include "magblock/sweep.hpp"

namespace magblock {

enum class RunMode { kSteady, kSweep, kResonance, kThermalThreshold, kCheck };
enum class OutputFormat { kCsv, kJson };

std::string_view mode_name(RunMode mode);
std::optional<RunMode> parse_mode(std::string_view name);

/// One CLI invocation. Frequencies are in units of gamma, like the model
/// parameters; omega_m / omega_q are only used to convert a thermal
/// occupation into a temperature.
struct RunConfig {
    RunMode mode = RunMode::kSteady;
    SystemParams params;
    std::vector<AxisSpec> axes;
    std::optional<ThermalChannel> channel;
    std::optional<double> threshold_hi;
    double omega_m = 8500.0;  // 8.5 GHz at the default gamma
    double omega_q = 8500.0;
    std::string output_path;  // empty: standard output
    std::optional<OutputFormat> format;
    int workers = 0;

    /// Explicit format, or JSON for steady/thermal-threshold/check and CSV otherwise.
    OutputFormat effective_format() const;
    /// Explicit bound, or 0.1 for m_th and 30 for n_th.
    double effective_threshold_hi() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses a flat `key = value` document (`#` comments, `[section]` lines
/// ignored), then applies `key=value` overrides in order. Unknown keys,
/// unparsable values and invariant violations throw ConfigError naming the
/// key and line (line 0 for overrides).
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

/// Inverse of parse_config: emits every set field, one key per line.
std::string serialize_config(const RunConfig& config);

}  // namespace magblock
