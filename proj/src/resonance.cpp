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

#include "magblock/resonance.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "magblock/errors.hpp"
#include "magblock/sweep.hpp"

namespace magblock {
namespace {

constexpr std::array<std::pair<int, int>, 4> kSigns = {{{+1, -1}, {-1, +1}, {+1, +1}, {-1, -1}}};

std::array<Resonance, 4> evaluate(ResonanceOrder order, double scale, double shifted, double bare,
                                  const std::array<const char*, 4>& labels) {
    std::array<Resonance, 4> out{};
    for (std::size_t i = 0; i < kSigns.size(); ++i) {
        const auto [s1, s2] = kSigns[i];
        out[i] = {order, scale * (s1 * shifted + s2 * bare), labels[i]};
    }
    return out;
}

}  // namespace

std::vector<Resonance> ResonanceSet::all() const {
    std::vector<Resonance> out(single_magnon.begin(), single_magnon.end());
    out.insert(out.end(), two_magnon.begin(), two_magnon.end());
    return out;
}

std::array<Resonance, 4> single_magnon_detunings(double delta_q, double chi_qm, double omega_s) {
    const double shifted = std::hypot(delta_q + 2.0 * chi_qm, omega_s);
    const double bare = std::hypot(delta_q, omega_s);
    return evaluate(ResonanceOrder::kSingleMagnon, 0.5, shifted, bare,
                    {"|g,0>->|g,1>", "|e,0>->|e,1>", "|e,0>->|g,1>", "|g,0>->|e,1>"});
}

std::array<Resonance, 4> two_magnon_detunings(double delta_q, double chi_qm, double omega_s) {
    const double shifted = std::hypot(delta_q + 4.0 * chi_qm, omega_s);
    const double bare = std::hypot(delta_q, omega_s);
    return evaluate(ResonanceOrder::kTwoMagnon, 0.25, shifted, bare,
                    {"|g,0>->|g(e),2>", "|e,0>->|g(e),2>", "|e,0>->|g(e),2>", "|g,0>->|g(e),2>"});
}

ResonanceSet resonance_set(double delta_q, double chi_qm, double omega_s) {
    return {single_magnon_detunings(delta_q, chi_qm, omega_s),
            two_magnon_detunings(delta_q, chi_qm, omega_s)};
}

const char* extremum_name(ExtremumKind kind) {
    switch (kind) {
        case ExtremumKind::kMinimum: return "min";
        case ExtremumKind::kMaximum: return "max";
        case ExtremumKind::kNone: break;
    }
    return "none";
}

std::vector<std::pair<std::size_t, ExtremumKind>> local_extrema(const SweepResult& sweep) {
    std::vector<std::pair<std::size_t, ExtremumKind>> out;
    const auto& records = sweep.records;
    for (std::size_t i = 1; i + 1 < records.size(); ++i) {
        const auto& prev = records[i - 1].g2;
        const auto& here = records[i].g2;
        const auto& next = records[i + 1].g2;
        if (!prev || !here || !next) continue;
        if (*here < *prev && *here < *next) out.emplace_back(i, ExtremumKind::kMinimum);
        if (*here > *prev && *here > *next) out.emplace_back(i, ExtremumKind::kMaximum);
    }
    return out;
}

std::vector<ResonanceAnnotation> annotate_sweep(const SweepResult& sweep,
                                                const std::vector<Resonance>& resonances) {
    if (sweep.axes.size() != 1 || sweep.axes.front().parameter != SweepParameter::kDeltaM) {
        throw InvalidArgument("annotate_sweep: requires a one-dimensional delta_m sweep");
    }
    const AxisSpec& axis = sweep.axes.front();
    const auto extrema = local_extrema(sweep);

    std::vector<ResonanceAnnotation> out;
    out.reserve(resonances.size());
    for (const auto& resonance : resonances) {
        ResonanceAnnotation note;
        note.resonance = resonance;
        const double x = resonance.detuning;
        if (x < axis.start || x > axis.stop) {
            out.push_back(std::move(note));
            continue;
        }
        note.in_range = true;

        std::size_t nearest = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < axis.points; ++i) {
            const double gap = std::abs(axis.value(i) - x);
            if (gap < best) {
                best = gap;
                nearest = i;
            }
        }
        note.nearest_index = nearest;

        std::size_t window_gap = std::numeric_limits<std::size_t>::max();
        double extremum_gap = std::numeric_limits<double>::infinity();
        for (const auto& [index, kind] : extrema) {
            const std::size_t steps = index > nearest ? index - nearest : nearest - index;
            if (steps <= 3 && steps < window_gap) {
                window_gap = steps;
                note.local_kind = kind;
            }
            const double gap = std::abs(axis.value(index) - x);
            if (gap < extremum_gap) {
                extremum_gap = gap;
                note.extremum_index = index;
                note.extremum_kind = kind;
                note.distance = gap;
            }
        }
        out.push_back(std::move(note));
    }
    return out;
}

}  // namespace magblock
