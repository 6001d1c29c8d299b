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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "magblock/complex_matrix.hpp"
#include "magblock/fock_space.hpp"
#include "magblock/observables.hpp"
#include "magblock/resonance.hpp"
#include "magblock/steady_state.hpp"
#include "magblock/sweep.hpp"
#include "test_support.hpp"

namespace {

using namespace magblock;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Physicality bookkeeping across every state solved for criteria 1-7.
struct PhysicalityTally {
    std::size_t states = 0;
    std::size_t failures = 0;
    double worst_trace = 0.0;
    double worst_hermiticity = 0.0;
    double worst_min_eigenvalue = 0.0;
    double worst_population = 0.0;
    double worst_residual = 0.0;

    void add(const SteadyStateResult& r) {
        const PhysicalityReport rep = check_physicality(r);
        ++states;
        if (!rep.ok()) ++failures;
        worst_trace = std::max(worst_trace, rep.trace_error);
        worst_hermiticity = std::max(worst_hermiticity, rep.hermiticity_error);
        worst_min_eigenvalue = std::min(worst_min_eigenvalue, rep.min_eigenvalue);
        worst_population = std::max(worst_population, rep.population_sum_error);
        worst_residual = std::max(worst_residual, rep.residual_norm);
    }
};

PhysicalityTally tally;
int failed = 0;

void report(int id, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failed;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Scan {
    std::vector<double> x;
    std::vector<double> g2;
    std::size_t argmin = 0;
    std::size_t argmax = 0;
};

// Serial detuning scan that keeps every state for the physicality tally.
Scan detuning_scan(SystemParams p, double lo, double hi, std::size_t points) {
    const AxisSpec axis{SweepParameter::kDeltaM, lo, hi, points};
    Scan s;
    for (std::size_t i = 0; i < points; ++i) {
        p.delta_m = axis.value(i);
        const SteadyStateResult r = solve_steady_state(p);
        tally.add(r);
        s.x.push_back(p.delta_m);
        s.g2.push_back(r.g2_zero.value_or(NAN));
    }
    s.argmin = static_cast<std::size_t>(std::min_element(s.g2.begin(), s.g2.end()) - s.g2.begin());
    s.argmax = static_cast<std::size_t>(std::max_element(s.g2.begin(), s.g2.end()) - s.g2.begin());
    return s;
}

SystemParams with_chi(double chi) {
    SystemParams p;
    p.chi_qm = chi;
    return p;
}

void solve_and_tally(const SystemParams& p) { tally.add(solve_steady_state(p)); }

double crit1_optimum = 0.0;

void criterion_1() {
    const auto start = Clock::now();
    const Scan s = detuning_scan(with_chi(20.0), -60.0, 60.0, 241);
    const double elapsed = seconds_since(start);
    crit1_optimum = s.x[s.argmin];
    const double best = s.g2[s.argmin];

    SystemParams alt = with_chi(20.0);
    alt.kappa_phi = alt.kappa_q - 0.5 * alt.kappa_1;
    const Scan a = detuning_scan(alt, -60.0, 60.0, 241);

    const bool pass = best >= 0.02 && best <= 0.08 && elapsed < 30.0;
    report(1, pass,
           "min g2 = " + fmt(best) + " at delta_m = " + fmt(crit1_optimum) + " (kappa_phi = " +
               fmt(with_chi(20.0).dephasing_rate()) + "), band [0.02, 0.08]; alternate kappa_phi = " +
               fmt(*alt.kappa_phi) + " gives " + fmt(a.g2[a.argmin]) + " at delta_m = " + fmt(a.x[a.argmin]) +
               "; scan " + fmt(elapsed) + " s");
}

void criterion_2() {
    const Scan s = detuning_scan(with_chi(1.0), -60.0, 60.0, 241);
    std::size_t outside = 0;
    for (double g : s.g2)
        if (!(g >= 0.8 && g <= 1.2)) ++outside;
    report(2, outside == 0,
           "g2 range [" + fmt(s.g2[s.argmin]) + ", " + fmt(s.g2[s.argmax]) + "] (max at delta_m = " +
               fmt(s.x[s.argmax]) + "), " + std::to_string(outside) + " of 241 points outside [0.8, 1.2]");
}

void criterion_3() {
    const Scan s = detuning_scan(with_chi(40.0), -60.0, 60.0, 241);
    report(3, s.g2[s.argmax] >= 30.0,
           "max g2 = " + fmt(s.g2[s.argmax]) + " at delta_m = " + fmt(s.x[s.argmax]) + ", needs >= 30");
}

double magnon_crossing = 0.0;

void criterion_4() {
    const SystemParams p;
    const ThresholdResult t = thermal_threshold(p, ThermalChannel::kMagnon, 0.1);
    magnon_crossing = t.crossing;
    SystemParams at = p;
    at.m_th = t.crossing;
    solve_and_tally(at);
    const double occupation = thermal_occupation(8.5e9, 0.072);
    const bool pass = t.crossing >= 0.002 && t.crossing <= 0.006 && occupation >= 0.0033 && occupation <= 0.0037;
    report(4, pass,
           "m_th crossing = " + fmt(t.crossing) + " (" + std::to_string(t.iterations) +
               " bisections), band [0.002, 0.006]; thermal_occupation(8.5 GHz, 72 mK) = " + fmt(occupation) +
               ", band [0.0033, 0.0037]");
}

void criterion_5() {
    const SystemParams p;
    const ThresholdResult t = thermal_threshold(p, ThermalChannel::kQubit, 30.0);
    SystemParams at = p;
    at.n_th = t.crossing;
    solve_and_tally(at);
    report(5, t.crossing > magnon_crossing,
           "n_th crossing = " + fmt(t.crossing) + " vs m_th crossing = " + fmt(magnon_crossing));
}

void criterion_6() {
    const auto start = Clock::now();
    std::mt19937_64 rng(20240917);
    std::uniform_real_distribution<double> dm(-80.0, 80.0), chi(0.0, 50.0);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        SystemParams p;
        p.delta_m = dm(rng);
        p.chi_qm = chi(rng);
        const SteadyStateResult direct = solve_steady_state(p, SolveMethod::kDirect);
        const SteadyStateResult evolved = solve_steady_state(p, SolveMethod::kEvolve);
        tally.add(direct);
        tally.add(evolved);
        worst = std::max(worst, max_abs_diff(direct.rho_ss, evolved.rho_ss));
    }
    const double elapsed = seconds_since(start);
    report(6, worst < 1e-6 && elapsed < 120.0,
           "max elementwise |direct - evolve| = " + fmt(worst) + " over 10 points; " + fmt(elapsed) + " s");
}

void criterion_7() {
    SystemParams p = with_chi(20.0);
    p.delta_m = crit1_optimum;
    SystemParams big = p;
    big.n_fock = 10;
    const SteadyStateResult low = solve_steady_state(p);
    const SteadyStateResult high = solve_steady_state(big);
    tally.add(low);
    tally.add(high);
    const double diff = std::abs(*low.g2_zero - *high.g2_zero);
    report(7, diff < 1e-4, "|g2(6) - g2(10)| = " + fmt(diff) + " at delta_m = " + fmt(crit1_optimum));
}

void criterion_8() {
    report(8, tally.failures == 0 && tally.states > 0,
           std::to_string(tally.states) + " states, " + std::to_string(tally.failures) +
               " failures; worst trace " + fmt(tally.worst_trace) + ", hermiticity " +
               fmt(tally.worst_hermiticity) + ", min eigenvalue " + fmt(tally.worst_min_eigenvalue) +
               ", population sum " + fmt(tally.worst_population) + ", residual " + fmt(tally.worst_residual));
}

void criterion_9() {
    const HilbertLayout small(6), large(8);
    const double fock = g2_zero(basis_projector(small, Qubit::kGround, 1), small);
    const double coherent = g2_zero(testing::coherent_state(large, std::sqrt(0.1)), large);

    // Thermal states over the stated range m_th <= 0.3, n_fock >= 8.
    int thermal_misses = 0, thermal_total = 0;
    double worst = 0.0, worst_nbar = 0.0;
    std::size_t worst_fock = 0;
    for (std::size_t n_fock : {8u, 10u, 12u, 16u}) {
        const HilbertLayout layout(n_fock);
        for (double nbar : {0.01, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3}) {
            const double dev = std::abs(g2_zero(testing::thermal_state(layout, nbar), layout) - 2.0);
            ++thermal_total;
            if (!(dev <= 1e-3)) ++thermal_misses;
            if (dev > worst) {
                worst = dev;
                worst_nbar = nbar;
                worst_fock = n_fock;
            }
        }
    }
    const bool pass = fock == 0.0 && thermal_misses == 0 && std::abs(coherent - 1.0) <= 1e-6;
    report(9, pass,
           "Fock |g,1> g2 = " + fmt(fock) + "; thermal |g2 - 2| worst " + fmt(worst) + " at m_th " +
               fmt(worst_nbar) + ", n_fock " + std::to_string(worst_fock) + ", " + std::to_string(thermal_misses) +
               " of " + std::to_string(thermal_total) + " (m_th, n_fock) pairs outside 1e-3; coherent (|alpha|^2 0.1) g2 = " +
               fmt(coherent));
}

void criterion_10() {
    SystemParams p = with_chi(45.0);
    const SweepResult sweep = run_sweep(p, {AxisSpec{SweepParameter::kDeltaM, -80.0, 80.0, 321}});
    const auto set = single_magnon_detunings(p.delta_q, p.chi_qm, p.omega_s);
    const auto notes = annotate_sweep(sweep, {set.begin(), set.end()});
    bool pass = true;
    std::string detail;
    for (const auto& n : notes) {
        const bool ok = n.distance && *n.distance <= 5.0;
        pass = pass && ok;
        detail += n.resonance.label + " " + fmt(n.resonance.detuning) + " -> ";
        if (n.extremum_index) {
            detail += std::string(extremum_name(n.extremum_kind)) + " at " +
                      fmt(sweep.records[*n.extremum_index].axis1) + " (" + fmt(*n.distance) + ")";
        } else {
            detail += "no extremum";
        }
        detail += "; ";
    }
    // Nominal extremum locations, reported only.
    const auto extrema = local_extrema(sweep);
    for (double nominal : {-56.0, -20.0, 20.0, 56.0}) {
        double best = INFINITY;
        for (const auto& [index, kind] : extrema)
            best = std::min(best, std::abs(sweep.records[index].axis1 - nominal));
        detail += "nominal " + fmt(nominal) + " nearest extremum " + fmt(best) + " away; ";
    }
    report(10, pass, detail + "tolerance 5");
}

}  // namespace

int main() {
    const auto start = Clock::now();
    const std::vector<void (*)()> criteria{criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                           criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i + 1), false, std::string("error: ") + e.what());
        }
    }
    std::printf("%d of %zu criteria failed (%.1f s)\n", failed, criteria.size(), seconds_since(start));
    return failed == 0 ? 0 : 1;
}
