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

#include <array>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "magblock/liouvillian.hpp"
#include "magblock/steady_state.hpp"

namespace magblock {

enum class SweepParameter { kDeltaM, kChiQm, kMTh, kNTh, kOmegaD, kDeltaQ };

std::string_view parameter_name(SweepParameter parameter);
std::optional<SweepParameter> parse_parameter(std::string_view name);

/// Overwrites one field of p.
void set_parameter(SystemParams& p, SweepParameter parameter, double value);

/// Linearly spaced axis. A single point requires start == stop.
struct AxisSpec {
    SweepParameter parameter = SweepParameter::kDeltaM;
    double start = 0.0;
    double stop = 0.0;
    std::size_t points = 2;

    void validate() const;
    double value(std::size_t i) const;

    friend bool operator==(const AxisSpec&, const AxisSpec&) = default;
};

inline constexpr std::size_t kMaxGridPoints = 1'000'000;
inline constexpr std::size_t kRecordedPopulations = 5;

struct SweepRecord {
    double axis1;
    std::optional<double> axis2;
    std::optional<double> g2;        // empty when the magnon population vanishes
    std::optional<double> log10_g2;
    std::array<double, kRecordedPopulations> p_n;  // zero beyond the truncation
    double mean_magnon;
    double qubit_excitation;
    double residual_norm;
    SolveMethod method;
};

struct SweepResult {
    SystemParams base;
    std::vector<AxisSpec> axes;
    /// Row-major over (axis1, axis2).
    std::vector<SweepRecord> records;
};

struct SweepOptions {
    /// OpenMP thread count; 0 keeps the runtime default.
    int workers = 0;
};

/// Parallel map over grid points. Output order depends only on the grid.
/// Points that fail the direct solve are retried through time evolution; a
/// point that still fails aborts the sweep with its coordinates.
SweepResult run_sweep(const SystemParams& base, const std::vector<AxisSpec>& axes,
                      const SweepOptions& options = {});

/// Single-threaded reference for run_sweep.
SweepResult run_sweep_serial(const SystemParams& base, const std::vector<AxisSpec>& axes);

SweepRecord make_record(const SteadyStateResult& result, double axis1, std::optional<double> axis2);

enum class ThermalChannel { kMagnon, kQubit };

std::string_view channel_name(ThermalChannel channel);

struct ThresholdResult {
    double crossing;   // occupation at which g2(0) = 1
    int iterations;
    double g2_at_zero;
    double g2_at_hi;
};

/// Bisects the thermal occupation of one channel on [0, hi] for the
/// g2(0) = 1 crossing, to relative tolerance 1e-3 in at most 40 steps.
/// Throws BracketError unless g2(0) < 1 at zero and > 1 at hi.
ThresholdResult thermal_threshold(const SystemParams& base, ThermalChannel channel, double hi);

/// Shortest decimal that round-trips to the same double.
std::string format_real(double value);

void write_csv(const SweepResult& result, std::ostream& out);
void write_csv(const SweepResult& result, const std::filesystem::path& destination);

}  // namespace magblock
