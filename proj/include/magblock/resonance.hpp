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
#include <optional>
#include <string>
#include <vector>

namespace magblock {

struct SweepResult;

enum class ResonanceOrder { kSingleMagnon, kTwoMagnon };

struct Resonance {
    ResonanceOrder order;
    double detuning;  // delta_m, units of gamma
    std::string label;
};

/// Closed-form single- and two-magnon resonance detunings, each in the sign
/// order (+,-), (-,+), (+,+), (-,-).
struct ResonanceSet {
    std::array<Resonance, 4> single_magnon;
    std::array<Resonance, 4> two_magnon;

    std::vector<Resonance> all() const;
};

/// ½[s1·sqrt((Δq+2χ)²+Ωs²) + s2·sqrt(Δq²+Ωs²)]
std::array<Resonance, 4> single_magnon_detunings(double delta_q, double chi_qm, double omega_s);

/// ¼[s1·sqrt((Δq+4χ)²+Ωs²) + s2·sqrt(Δq²+Ωs²)]
std::array<Resonance, 4> two_magnon_detunings(double delta_q, double chi_qm, double omega_s);

ResonanceSet resonance_set(double delta_q, double chi_qm, double omega_s);

enum class ExtremumKind { kNone, kMinimum, kMaximum };

const char* extremum_name(ExtremumKind kind);

struct ResonanceAnnotation {
    Resonance resonance{};
    bool in_range = false;
    /// Grid index closest to the predicted detuning (in-range only).
    std::optional<std::size_t> nearest_index;
    /// Extremum type found within ±3 grid points of nearest_index.
    ExtremumKind local_kind = ExtremumKind::kNone;
    /// Closest local extremum of g2(0) anywhere on the curve.
    std::optional<std::size_t> extremum_index;
    ExtremumKind extremum_kind = ExtremumKind::kNone;
    std::optional<double> distance;  // |prediction - extremum location|
};

/// Interior grid points that are strict local minima or maxima of g2(0).
/// Points with undefined g2(0) never qualify and break neighbourhoods.
std::vector<std::pair<std::size_t, ExtremumKind>> local_extrema(const SweepResult& sweep);

/// Locates each resonance on a 1-D delta_m sweep and relates it to the
/// observed g2(0) extrema. Resonances outside the axis range are kept and
/// marked out of range.
std::vector<ResonanceAnnotation> annotate_sweep(const SweepResult& sweep,
                                                const std::vector<Resonance>& resonances);

}  // namespace magblock
