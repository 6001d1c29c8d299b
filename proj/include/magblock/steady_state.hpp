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
#include <vector>

#include "magblock/complex_matrix.hpp"
#include "magblock/liouvillian.hpp"

namespace magblock {

enum class SolveMethod { kDirect, kEvolve };

const char* method_name(SolveMethod method);

/// Accepted ‖L·vec(rho)‖₂ for a steady state returned by any solver.
inline constexpr double kMaxSteadyResidual = 1e-6;

/// Steady state of L with unit trace. Row 0 of L is replaced by the trace
/// functional and the system solved against e₀; the result is symmetrized.
/// Throws NonUniqueSteadyState if the pinned system is singular and
/// ConvergenceFailure if the residual exceeds kMaxSteadyResidual.
ComplexMatrix solve_direct(const ComplexMatrix& liouvillian, std::size_t dim);

double liouvillian_residual(const ComplexMatrix& liouvillian, const ComplexMatrix& rho);

struct EvolveOptions {
    /// Stop once ‖rhs(rho)‖_F drops below this.
    double rhs_tolerance = 1e-8;
    /// Initial state; defaults to the projector onto basis index 0 (|g,0>).
    std::optional<ComplexMatrix> initial_state;
};

/// Fixed-step RK4 integration of the matrix-form master equation with trace
/// renormalization after each step. Requires t_final ≥ 10 / (smallest nonzero
/// rate) and dt·‖L‖₂ < 0.1. Throws ConvergenceFailure (carrying the final
/// ‖rhs‖_F) if t_final is reached first.
ComplexMatrix evolve_to_steady(const ComplexMatrix& h, const std::vector<LindbladTerm>& terms,
                               double t_final, double dt, const EvolveOptions& options = {});

/// Largest dt allowed by the stability precondition, with a safety factor.
double stable_time_step(const ComplexMatrix& h, const std::vector<LindbladTerm>& terms);

struct SteadyStateResult {
    ComplexMatrix rho_ss;
    double residual_norm;
    SolveMethod method;
    /// Empty when the magnon population is numerically zero.
    std::optional<double> g2_zero;
    std::vector<double> p_n;
    double mean_magnon;
    double qubit_excitation;
};

SteadyStateResult analyze_state(const SystemParams& p, const ComplexMatrix& liouvillian,
                                ComplexMatrix rho, SolveMethod method);

SteadyStateResult solve_steady_state(const SystemParams& p, SolveMethod method = SolveMethod::kDirect);

/// Steady state by direct solve, falling back to time evolution when the
/// direct path reports a convergence or uniqueness failure.
SteadyStateResult solve_with_fallback(const SystemParams& p);

struct PhysicalityReport {
    double trace_error;
    double hermiticity_error;
    double min_eigenvalue;
    double population_sum_error;
    double residual_norm;

    /// trace and Hermiticity within 1e-10, eigenvalues ≥ -1e-8, ΣPₙ within
    /// 1e-9 and residual below max_residual.
    bool ok(double max_residual = 1e-8) const;
};

PhysicalityReport check_physicality(const SteadyStateResult& result);

enum class TruncationQuantity { kG2, kMeanMagnon };

struct TruncationReport {
    bool converged;
    std::size_t n_fock_low;
    std::size_t n_fock_high;
    std::optional<double> value_low;
    std::optional<double> value_high;
};

/// Compares quantity at n_fock and n_fock + 4. Two undefined g2 values (no
/// magnon population at either truncation) count as agreement.
TruncationReport truncation_converged(const SystemParams& p, TruncationQuantity quantity, double tol);

}  // namespace magblock
