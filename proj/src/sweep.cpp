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

#include <cerrno>
#include <charconv>
#include <cstring>
#include <cmath>
#include <fstream>
#include <string>

#include <omp.h>

#include "magblock/errors.hpp"

namespace magblock {
namespace {

constexpr std::array<std::pair<SweepParameter, std::string_view>, 6> kParameterNames = {{
    {SweepParameter::kDeltaM, "delta_m"},
    {SweepParameter::kChiQm, "chi_qm"},
    {SweepParameter::kMTh, "m_th"},
    {SweepParameter::kNTh, "n_th"},
    {SweepParameter::kOmegaD, "omega_d"},
    {SweepParameter::kDeltaQ, "delta_q"},
}};

std::size_t grid_size(const std::vector<AxisSpec>& axes) {
    if (axes.empty() || axes.size() > 2) {
        throw InvalidArgument("sweep: expected one or two axes, got " + std::to_string(axes.size()));
    }
    std::size_t total = 1;
    for (const auto& axis : axes) {
        axis.validate();
        if (axis.points > kMaxGridPoints / total) throw InvalidArgument("sweep: grid exceeds 1e6 points");
        total *= axis.points;
    }
    return total;
}

struct GridPoint {
    SystemParams params;
    double axis1;
    std::optional<double> axis2;
};

GridPoint grid_point(const SystemParams& base, const std::vector<AxisSpec>& axes, std::size_t k) {
    GridPoint point{base, 0.0, std::nullopt};
    if (axes.size() == 1) {
        point.axis1 = axes[0].value(k);
    } else {
        point.axis1 = axes[0].value(k / axes[1].points);
        point.axis2 = axes[1].value(k % axes[1].points);
    }
    set_parameter(point.params, axes[0].parameter, point.axis1);
    if (point.axis2) set_parameter(point.params, axes[1].parameter, *point.axis2);
    return point;
}

std::string describe(const std::vector<AxisSpec>& axes, const GridPoint& point) {
    std::string out = std::string(parameter_name(axes[0].parameter)) + "=" + format_real(point.axis1);
    if (point.axis2) {
        out += ", " + std::string(parameter_name(axes[1].parameter)) + "=" + format_real(*point.axis2);
    }
    return out;
}

SweepRecord solve_point(const std::vector<AxisSpec>& axes, const GridPoint& point) {
    SteadyStateResult result = [&] {
        try {
            return solve_with_fallback(point.params);
        } catch (const Error& e) {
            throw Error(ErrorCode::kSweepAborted,
                        "sweep aborted at " + describe(axes, point) + ": " + e.what());
        }
    }();
    if (!(result.residual_norm < kMaxSteadyResidual)) {
        throw Error(ErrorCode::kSweepAborted, "sweep aborted at " + describe(axes, point) +
                                                  ": residual " + format_real(result.residual_norm));
    }
    return make_record(result, point.axis1, point.axis2);
}

}  // namespace

std::string_view parameter_name(SweepParameter parameter) {
    for (const auto& [p, name] : kParameterNames)
        if (p == parameter) return name;
    return "unknown";
}

std::optional<SweepParameter> parse_parameter(std::string_view name) {
    for (const auto& [p, known] : kParameterNames)
        if (known == name) return p;
    return std::nullopt;
}

void set_parameter(SystemParams& p, SweepParameter parameter, double value) {
    switch (parameter) {
        case SweepParameter::kDeltaM: p.delta_m = value; break;
        case SweepParameter::kChiQm: p.chi_qm = value; break;
        case SweepParameter::kMTh: p.m_th = value; break;
        case SweepParameter::kNTh: p.n_th = value; break;
        case SweepParameter::kOmegaD: p.omega_d = value; break;
        case SweepParameter::kDeltaQ: p.delta_q = value; break;
    }
}

void AxisSpec::validate() const {
    const std::string name(parameter_name(parameter));
    if (!std::isfinite(start) || !std::isfinite(stop)) {
        throw InvalidArgument("axis " + name + ": bounds must be finite");
    }
    if (points == 0) throw InvalidArgument("axis " + name + ": needs at least one point");
    if (points == 1 && start != stop) {
        throw InvalidArgument("axis " + name + ": a single-point axis needs start == stop");
    }
    if (points >= 2 && !(start < stop)) throw InvalidArgument("axis " + name + ": start must be < stop");
}

double AxisSpec::value(std::size_t i) const {
    if (points == 1) return start;
    if (i + 1 == points) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
}

SweepRecord make_record(const SteadyStateResult& result, double axis1, std::optional<double> axis2) {
    SweepRecord record{axis1, axis2, result.g2_zero, std::nullopt, {}, result.mean_magnon,
                       result.qubit_excitation, result.residual_norm, result.method};
    if (record.g2) record.log10_g2 = std::log10(*record.g2);
    record.p_n.fill(0.0);
    for (std::size_t n = 0; n < kRecordedPopulations && n < result.p_n.size(); ++n) {
        record.p_n[n] = result.p_n[n];
    }
    return record;
}

SweepResult run_sweep(const SystemParams& base, const std::vector<AxisSpec>& axes,
                      const SweepOptions& options) {
    base.validate();
    const std::size_t total = grid_size(axes);
    std::vector<std::optional<SweepRecord>> slots(total);
    std::vector<std::string> failures(total);

    const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
    const auto count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long k = 0; k < count; ++k) {
        const auto index = static_cast<std::size_t>(k);
        try {
            slots[index] = solve_point(axes, grid_point(base, axes, index));
        } catch (const std::exception& e) {
            failures[index] = e.what();
        }
    }

    SweepResult result{base, axes, {}};
    result.records.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        if (!slots[k]) throw Error(ErrorCode::kSweepAborted, failures[k]);
        result.records.push_back(*slots[k]);
    }
    return result;
}

SweepResult run_sweep_serial(const SystemParams& base, const std::vector<AxisSpec>& axes) {
    base.validate();
    const std::size_t total = grid_size(axes);
    SweepResult result{base, axes, {}};
    result.records.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
        result.records.push_back(solve_point(axes, grid_point(base, axes, k)));
    }
    return result;
}

std::string_view channel_name(ThermalChannel channel) {
    return channel == ThermalChannel::kMagnon ? "m_th" : "n_th";
}

ThresholdResult thermal_threshold(const SystemParams& base, ThermalChannel channel, double hi) {
    base.validate();
    if (!(hi > 0.0) || !std::isfinite(hi)) throw InvalidArgument("thermal_threshold: hi must be > 0");

    const auto g2_at = [&](double occupation) {
        SystemParams p = base;
        (channel == ThermalChannel::kMagnon ? p.m_th : p.n_th) = occupation;
        const SteadyStateResult r = solve_with_fallback(p);
        if (!r.g2_zero) {
            throw UndefinedCorrelation("thermal_threshold: g2(0) undefined at " +
                                       std::string(channel_name(channel)) + "=" + format_real(occupation));
        }
        return *r.g2_zero;
    };

    ThresholdResult out{0.0, 0, g2_at(0.0), g2_at(hi)};
    if (!(out.g2_at_zero < 1.0 && out.g2_at_hi > 1.0)) {
        throw BracketError("thermal_threshold: no g2(0)=1 crossing bracketed on [0, " + format_real(hi) +
                               "] for " + std::string(channel_name(channel)) + ": g2(0) = " +
                               format_real(out.g2_at_zero) + " at 0, " + format_real(out.g2_at_hi) +
                               " at hi",
                           out.g2_at_zero, out.g2_at_hi);
    }

    double lo = 0.0;
    double up = hi;
    for (out.iterations = 1; out.iterations <= 40; ++out.iterations) {
        const double mid = 0.5 * (lo + up);
        (g2_at(mid) < 1.0 ? lo : up) = mid;
        if (up - lo <= 1e-3 * 0.5 * (lo + up)) break;
    }
    out.iterations = std::min(out.iterations, 40);
    out.crossing = 0.5 * (lo + up);
    return out;
}

std::string format_real(double value) {
    std::array<char, 64> buffer{};
    const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc{}) throw InvalidArgument("format_real: conversion failed");
    return std::string(buffer.data(), end);
}

void write_csv(const SweepResult& result, std::ostream& out) {
    std::string header(parameter_name(result.axes.at(0).parameter));
    if (result.axes.size() > 1) header += "," + std::string(parameter_name(result.axes[1].parameter));
    header += ",g2,log10_g2,p0,p1,p2,p3,p4,mean_magnon,qubit_excitation,residual\n";
    out << header;

    std::string line;
    for (const auto& r : result.records) {
        line = format_real(r.axis1);
        if (result.axes.size() > 1) line += "," + format_real(r.axis2.value_or(0.0));
        line += ",";
        if (r.g2) line += format_real(*r.g2);
        line += ",";
        if (r.log10_g2) line += format_real(*r.log10_g2);
        for (double p : r.p_n) line += "," + format_real(p);
        line += "," + format_real(r.mean_magnon);
        line += "," + format_real(r.qubit_excitation);
        line += "," + format_real(r.residual_norm);
        line += "\n";
        out << line;
    }
    if (!out) throw IoError("write_csv: stream write failed");
}

void write_csv(const SweepResult& result, const std::filesystem::path& destination) {
    std::ofstream file(destination, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("write_csv: cannot open " + destination.string() + ": " + std::strerror(errno));
    write_csv(result, file);
    file.close();
    if (!file) throw IoError("write_csv: failed writing " + destination.string());
}

}  // namespace magblock
