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

#include "magblock/sweep.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "magblock/errors.hpp"

namespace magblock {
namespace {

std::size_t count_lines(const std::string& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

std::string csv_of(const SweepResult& result) {
    std::ostringstream out;
    write_csv(result, out);
    return out.str();
}

TEST(AxisSpec, Validation) {
    EXPECT_NO_THROW((AxisSpec{SweepParameter::kDeltaM, -1.0, 1.0, 2}.validate()));
    EXPECT_NO_THROW((AxisSpec{SweepParameter::kDeltaM, 3.0, 3.0, 1}.validate()));
    EXPECT_THROW((AxisSpec{SweepParameter::kDeltaM, 0.0, 1.0, 1}.validate()), InvalidArgument);
    EXPECT_THROW((AxisSpec{SweepParameter::kDeltaM, 1.0, 0.0, 5}.validate()), InvalidArgument);
    EXPECT_THROW((AxisSpec{SweepParameter::kDeltaM, 0.0, 1.0, 0}.validate()), InvalidArgument);
    EXPECT_THROW((AxisSpec{SweepParameter::kDeltaM, 0.0, INFINITY, 3}.validate()), InvalidArgument);
}

TEST(AxisSpec, EndpointsAreExact) {
    const AxisSpec axis{SweepParameter::kDeltaM, -60.0, 60.0, 241};
    EXPECT_EQ(axis.value(0), -60.0);
    EXPECT_EQ(axis.value(240), 60.0);
    EXPECT_DOUBLE_EQ(axis.value(120), 0.0);
}

TEST(Parameters, NamesRoundTrip) {
    for (auto p : {SweepParameter::kDeltaM, SweepParameter::kChiQm, SweepParameter::kMTh,
                   SweepParameter::kNTh, SweepParameter::kOmegaD, SweepParameter::kDeltaQ}) {
        EXPECT_EQ(parse_parameter(parameter_name(p)), p);
    }
    EXPECT_FALSE(parse_parameter("kappa_m").has_value());
}

TEST(Sweep, SinglePointMatchesDirectSolve) {
    SystemParams p;
    const auto sweep = run_sweep(p, {AxisSpec{SweepParameter::kDeltaM, 4.0, 4.0, 1}});
    ASSERT_EQ(sweep.records.size(), 1u);
    p.delta_m = 4.0;
    const auto single = solve_steady_state(p);
    EXPECT_EQ(sweep.records[0].axis1, 4.0);
    EXPECT_EQ(*sweep.records[0].g2, *single.g2_zero);
    EXPECT_EQ(sweep.records[0].mean_magnon, single.mean_magnon);
}

TEST(Sweep, ParallelMatchesSerialByteForByte) {
    const SystemParams p;
    const std::vector<AxisSpec> axes{{SweepParameter::kDeltaM, -30.0, 30.0, 13},
                                     {SweepParameter::kChiQm, 0.0, 40.0, 3}};
    const std::string reference = csv_of(run_sweep_serial(p, axes));
    for (int workers : {1, 2, 4}) {
        EXPECT_EQ(csv_of(run_sweep(p, axes, SweepOptions{workers})), reference) << workers;
    }
}

TEST(Sweep, TwoDimensionalRowRestrictsToOneDimensional) {
    const SystemParams p;
    const AxisSpec dm{SweepParameter::kDeltaM, -20.0, 20.0, 5};
    const auto grid = run_sweep(p, {dm, AxisSpec{SweepParameter::kChiQm, 10.0, 30.0, 3}});
    SystemParams fixed = p;
    fixed.chi_qm = 30.0;
    const auto line = run_sweep(fixed, {dm});
    ASSERT_EQ(grid.records.size(), 15u);
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& a = grid.records[i * 3 + 2];
        EXPECT_EQ(a.axis1, line.records[i].axis1);
        EXPECT_EQ(*a.axis2, 30.0);
        EXPECT_EQ(a.g2, line.records[i].g2);
    }
}

TEST(Sweep, CsvShape) {
    const SystemParams p;
    const auto grid = run_sweep(p, {AxisSpec{SweepParameter::kDeltaM, -1.0, 1.0, 2},
                                    AxisSpec{SweepParameter::kMTh, 0.0, 0.01, 2}});
    const std::string csv = csv_of(grid);
    EXPECT_EQ(count_lines(csv), 5u);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "delta_m,m_th,g2,log10_g2,p0,p1,p2,p3,p4,mean_magnon,qubit_excitation,residual");
}

TEST(Sweep, UndefinedCorrelationLeavesEmptyFields) {
    SystemParams p;
    p.omega_d = 0.0;
    const auto sweep = run_sweep(p, {AxisSpec{SweepParameter::kDeltaM, 0.0, 0.0, 1}});
    EXPECT_FALSE(sweep.records[0].g2.has_value());
    const std::string csv = csv_of(sweep);
    const std::string row = csv.substr(csv.find('\n') + 1);
    EXPECT_EQ(row.rfind("0,,,", 0), 0u) << row;
}

TEST(Sweep, GridLimit) {
    const SystemParams p;
    EXPECT_THROW(run_sweep(p, {AxisSpec{SweepParameter::kDeltaM, 0.0, 1.0, 1001},
                               AxisSpec{SweepParameter::kChiQm, 0.0, 1.0, 1000}}),
                 InvalidArgument);
    EXPECT_THROW(run_sweep(p, {}), InvalidArgument);
}

TEST(Sweep, FailedPointAbortsWithCoordinates) {
    SystemParams p;
    try {
        run_sweep(p, {AxisSpec{SweepParameter::kMTh, -1.0, 0.0, 2}});
        FAIL() << "expected abort";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kSweepAborted);
        EXPECT_NE(std::string(e.what()).find("m_th"), std::string::npos) << e.what();
    }
}

TEST(Sweep, WriteToMissingDirectoryFails) {
    const SystemParams p;
    const auto sweep = run_sweep(p, {AxisSpec{SweepParameter::kDeltaM, 0.0, 0.0, 1}});
    EXPECT_THROW(write_csv(sweep, std::filesystem::path("/nonexistent-dir/out.csv")), IoError);
}

struct Extent {
    double lo = INFINITY;
    double hi = 0.0;
};

Extent g2_extent(SystemParams p, double chi) {
    p.chi_qm = chi;
    const auto sweep = run_sweep(p, {AxisSpec{SweepParameter::kDeltaM, -60.0, 60.0, 241}});
    Extent e;
    for (const auto& r : sweep.records) {
        e.lo = std::min(e.lo, *r.g2);
        e.hi = std::max(e.hi, *r.g2);
    }
    return e;
}

TEST(Sweep, UnitContourFromChiTen) {
    // With kappa_phi = kappa_q - kappa_1/2 the detuning scan crosses g2 = 1
    // for every chi >= 10.
    SystemParams p;
    p.kappa_phi = 0.7;
    for (double chi : {10.0, 30.0, 50.0}) {
        const Extent e = g2_extent(p, chi);
        EXPECT_LT(e.lo, 1.0) << chi;
        EXPECT_GT(e.hi, 1.0) << chi;
    }
}

TEST(Sweep, UnitContourOnsetWithDefaultDephasing) {
    // The default kappa_phi = (kappa_1 + kappa_q)/2 moves the onset to just above chi = 10.
    const SystemParams p;
    EXPECT_GT(g2_extent(p, 10.0).lo, 1.0);
    for (double chi : {11.0, 30.0, 50.0}) {
        const Extent e = g2_extent(p, chi);
        EXPECT_LT(e.lo, 1.0) << chi;
        EXPECT_GT(e.hi, 1.0) << chi;
    }
}

TEST(ThermalThreshold, MagnonCrossingBeforeQubitCrossing) {
    const SystemParams p;
    const auto magnon = thermal_threshold(p, ThermalChannel::kMagnon, 0.1);
    const auto qubit = thermal_threshold(p, ThermalChannel::kQubit, 30.0);
    EXPECT_NEAR(magnon.crossing, 0.0039014839237047324, 0.0039 * 1e-3);
    EXPECT_NEAR(qubit.crossing, 13.802127999292937, 13.8 * 1e-3);
    EXPECT_GT(qubit.crossing, magnon.crossing);
    EXPECT_LT(magnon.g2_at_zero, 1.0);
    EXPECT_GT(magnon.g2_at_hi, 1.0);
    EXPECT_LE(magnon.iterations, 40);
}

TEST(ThermalThreshold, RejectsUnbracketedInterval) {
    SystemParams p;
    p.delta_m = 16.0;  // already bunched at zero temperature
    EXPECT_THROW(thermal_threshold(p, ThermalChannel::kMagnon, 0.1), BracketError);
    EXPECT_THROW(thermal_threshold(SystemParams{}, ThermalChannel::kMagnon, 0.0), InvalidArgument);
}

TEST(FormatReal, ShortestRoundTrip) {
    EXPECT_EQ(format_real(0.1), "0.1");
    EXPECT_EQ(format_real(-60.0), "-60");
    EXPECT_EQ(std::stod(format_real(0.09112522153336433)), 0.09112522153336433);
}

}  // namespace
}  // namespace magblock
