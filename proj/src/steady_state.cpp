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

#include "magblock/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "magblock/errors.hpp"
#include "magblock/linalg.hpp"
#include "magblock/observables.hpp"

namespace magblock {
namespace {

// Pivot quality below which the trace-pinned system is treated as singular,
// i.e. the Liouvillian kernel has more than one dimension.
constexpr double kSingularRcond = 1e-13;

ComplexMatrix symmetrized(const ComplexMatrix& rho) {
    ComplexMatrix out = rho + dagger(rho);
    out *= 0.5;
    return out;
}

double vector_norm(std::span<const Complex> v) {
    double acc = 0.0;
    for (const auto& z : v) acc += std::norm(z);
    return std::sqrt(acc);
}

}  // namespace

const char* method_name(SolveMethod method) {
    return method == SolveMethod::kDirect ? "direct" : "evolve";
}

ComplexMatrix solve_direct(const ComplexMatrix& liouvillian, std::size_t dim) {
    if (dim == 0 || liouvillian.rows() != dim * dim || liouvillian.cols() != dim * dim) {
        throw DimensionMismatch("solve_direct: Liouvillian is not " + std::to_string(dim * dim) +
                                " square");
    }
    ComplexMatrix pinned = liouvillian;
    for (std::size_t c = 0; c < pinned.cols(); ++c) pinned(0, c) = 0.0;
    for (std::size_t k = 0; k < dim; ++k) pinned(0, k * dim + k) = 1.0;

    std::vector<Complex> rhs(dim * dim, Complex{});
    rhs[0] = 1.0;
    const LinearSolution solution = lu_solve(pinned, rhs);
    const bool finite = std::all_of(solution.x.begin(), solution.x.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
    if (!finite || solution.rcond < kSingularRcond) {
        throw NonUniqueSteadyState("solve_direct: trace-pinned Liouvillian is singular (rcond " +
                                   std::to_string(solution.rcond) + "); steady state is not unique");
    }

    ComplexMatrix rho = symmetrized(unvec(solution.x, dim));
    const double residual = liouvillian_residual(liouvillian, rho);
    if (!(residual <= kMaxSteadyResidual)) {
        throw ConvergenceFailure("solve_direct: residual " + std::to_string(residual) +
                                     " exceeds tolerance",
                                 residual);
    }
    return rho;
}

double liouvillian_residual(const ComplexMatrix& liouvillian, const ComplexMatrix& rho) {
    return vector_norm(matvec(liouvillian, vec(rho)));
}

double stable_time_step(const ComplexMatrix& h, const std::vector<LindbladTerm>& terms) {
    const double norm = spectral_norm_estimate(liouvillian_matrix(h, terms));
    return norm > 0.0 ? 0.05 / norm : 0.01;
}

ComplexMatrix evolve_to_steady(const ComplexMatrix& h, const std::vector<LindbladTerm>& terms,
                               double t_final, double dt, const EvolveOptions& options) {
    const MasterEquation equation(h, terms);
    const std::size_t d = equation.dim();

    double min_rate = std::numeric_limits<double>::infinity();
    for (const auto& term : terms) {
        if (term.rate > 0.0) min_rate = std::min(min_rate, term.rate);
    }
    if (!std::isfinite(min_rate)) throw InvalidArgument("evolve_to_steady: no dissipative channel");
    if (!(dt > 0.0)) throw InvalidArgument("evolve_to_steady: dt must be > 0");
    if (!(t_final >= 10.0 / min_rate)) {
        throw InvalidArgument("evolve_to_steady: t_final " + std::to_string(t_final) +
                              " below 10 / min rate = " + std::to_string(10.0 / min_rate));
    }
    const double l_norm = spectral_norm_estimate(liouvillian_matrix(h, terms));
    if (!(dt * l_norm < 0.1)) {
        throw InvalidArgument("evolve_to_steady: dt * ||L|| = " + std::to_string(dt * l_norm) +
                              " must be < 0.1");
    }

    ComplexMatrix rho(d, d);
    if (options.initial_state) {
        if (options.initial_state->rows() != d || options.initial_state->cols() != d) {
            throw DimensionMismatch("evolve_to_steady: initial state dimension mismatch");
        }
        rho = *options.initial_state;
    } else {
        rho(0, 0) = 1.0;
    }

    const auto steps = static_cast<long long>(std::ceil(t_final / dt));
    double rhs_norm = 0.0;
    for (long long step = 0;; ++step) {
        const ComplexMatrix k1 = equation.rhs(rho);
        rhs_norm = frobenius_norm(k1);
        if (rhs_norm < options.rhs_tolerance) return symmetrized(rho);
        if (step >= steps) break;
        const ComplexMatrix k2 = equation.rhs(add_scaled(rho, 0.5 * dt, k1));
        const ComplexMatrix k3 = equation.rhs(add_scaled(rho, 0.5 * dt, k2));
        const ComplexMatrix k4 = equation.rhs(add_scaled(rho, dt, k3));
        ComplexMatrix increment = k1 + k4;
        increment += 2.0 * (k2 + k3);
        rho = add_scaled(rho, dt / 6.0, increment);
        rho *= 1.0 / trace(rho).real();
    }
    throw ConvergenceFailure("evolve_to_steady: ||rhs|| = " + std::to_string(rhs_norm) +
                                 " at t_final = " + std::to_string(t_final),
                             rhs_norm);
}

SteadyStateResult analyze_state(const SystemParams& p, const ComplexMatrix& liouvillian,
                                ComplexMatrix rho, SolveMethod method) {
    const HilbertLayout layout = p.layout();
    SteadyStateResult out{std::move(rho), 0.0, method, std::nullopt, {}, 0.0, 0.0};
    out.residual_norm = liouvillian_residual(liouvillian, out.rho_ss);
    out.p_n = magnon_distribution(out.rho_ss, layout);
    out.mean_magnon = mean_magnon(out.rho_ss, layout);
    out.qubit_excitation = qubit_excitation(out.rho_ss, layout);
    if (out.mean_magnon >= kMinMagnonPopulation) out.g2_zero = g2_zero(out.rho_ss, layout);
    return out;
}

namespace {

SteadyStateResult solve_by_evolution(const SystemParams& p, const ComplexMatrix& h,
                                     const std::vector<LindbladTerm>& terms,
                                     const ComplexMatrix& liouvillian) {
    double min_rate = std::numeric_limits<double>::infinity();
    for (const auto& term : terms)
        if (term.rate > 0.0) min_rate = std::min(min_rate, term.rate);
    // Upper bound only; integration stops as soon as the rhs norm is small.
    const double t_final = std::max(10.0 / min_rate, 500.0);
    ComplexMatrix rho = evolve_to_steady(h, terms, t_final, stable_time_step(h, terms));
    return analyze_state(p, liouvillian, std::move(rho), SolveMethod::kEvolve);
}

}  // namespace

SteadyStateResult solve_steady_state(const SystemParams& p, SolveMethod method) {
    p.validate();
    const ComplexMatrix h = build_hamiltonian(p);
    const auto terms = build_dissipators(p, p.layout());
    const ComplexMatrix l = liouvillian_matrix(h, terms);
    if (method == SolveMethod::kEvolve) return solve_by_evolution(p, h, terms, l);
    return analyze_state(p, l, solve_direct(l, p.layout().total_dim()), SolveMethod::kDirect);
}

SteadyStateResult solve_with_fallback(const SystemParams& p) {
    p.validate();
    const ComplexMatrix h = build_hamiltonian(p);
    const auto terms = build_dissipators(p, p.layout());
    const ComplexMatrix l = liouvillian_matrix(h, terms);
    try {
        return analyze_state(p, l, solve_direct(l, p.layout().total_dim()), SolveMethod::kDirect);
    } catch (const ConvergenceFailure&) {
    } catch (const NonUniqueSteadyState&) {
    }
    return solve_by_evolution(p, h, terms, l);
}

bool PhysicalityReport::ok(double max_residual) const {
    return trace_error <= 1e-10 && hermiticity_error <= 1e-10 && min_eigenvalue >= -1e-8 &&
           population_sum_error <= 1e-9 && residual_norm < max_residual;
}

PhysicalityReport check_physicality(const SteadyStateResult& result) {
    PhysicalityReport report{};
    report.trace_error = std::abs(trace(result.rho_ss) - Complex(1.0, 0.0));
    report.hermiticity_error = hermiticity_error(result.rho_ss);
    report.min_eigenvalue = hermitian_eigenvalues(result.rho_ss).front();
    double total = 0.0;
    for (double p : result.p_n) total += p;
    report.population_sum_error = std::abs(total - 1.0);
    report.residual_norm = result.residual_norm;
    return report;
}

TruncationReport truncation_converged(const SystemParams& p, TruncationQuantity quantity, double tol) {
    p.validate();
    if (!(tol > 0.0)) throw InvalidArgument("truncation_converged: tol must be > 0");
    SystemParams high = p;
    high.n_fock = p.n_fock + 4;

    const auto value = [quantity](const SteadyStateResult& r) -> std::optional<double> {
        if (quantity == TruncationQuantity::kMeanMagnon) return r.mean_magnon;
        return r.g2_zero;
    };
    TruncationReport report{false, p.n_fock, high.n_fock, value(solve_steady_state(p)),
                            value(solve_steady_state(high))};
    if (report.value_low && report.value_high) {
        report.converged = std::abs(*report.value_low - *report.value_high) < tol;
    } else {
        report.converged = !report.value_low && !report.value_high;
    }
    return report;
}

}  // namespace magblock
