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

#include "magblock/self_check.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "magblock/errors.hpp"
#include "magblock/linalg.hpp"
#include "magblock/observables.hpp"
#include "magblock/resonance.hpp"
#include "magblock/steady_state.hpp"
#include "magblock/sweep.hpp"

namespace magblock {
namespace {

ComplexMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist;
    ComplexMatrix out(n, n);
    for (auto& z : out.entries()) z = Complex(dist(rng), dist(rng));
    return out;
}

ComplexMatrix random_density(std::size_t n, std::mt19937_64& rng) {
    const ComplexMatrix a = random_matrix(n, rng);
    ComplexMatrix rho = matmul(a, dagger(a));
    rho *= 1.0 / trace(rho).real();
    return rho;
}

// Truncated single-mode thermal state with mean occupation `nbar`, qubit in |g>.
ComplexMatrix thermal_state(const HilbertLayout& layout, double nbar) {
    ComplexMatrix rho(layout.total_dim(), layout.total_dim());
    const double ratio = nbar / (1.0 + nbar);
    double total = 0.0;
    for (std::size_t n = 0; n < layout.n_fock(); ++n) total += std::pow(ratio, static_cast<double>(n));
    for (std::size_t n = 0; n < layout.n_fock(); ++n) {
        const std::size_t k = layout.index(Qubit::kGround, n);
        rho(k, k) = std::pow(ratio, static_cast<double>(n)) / total;
    }
    return rho;
}

std::string fmt(double value) { return format_real(value); }

CheckOutcome guarded(const std::string& name, const std::function<CheckOutcome()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {name, false, std::string("threw: ") + e.what()};
    }
}

}  // namespace

std::vector<CheckOutcome> run_self_checks(const SystemParams& p) {
    p.validate();
    const HilbertLayout layout = p.layout();
    std::mt19937_64 rng(20260101);
    std::vector<CheckOutcome> out;

    out.push_back(guarded("ladder_truncation", [&] {
        const ComplexMatrix a = annihilation(p.n_fock);
        const ComplexMatrix c = commutator(a, dagger(a));
        double err = std::abs(c(p.n_fock - 1, p.n_fock - 1) - Complex(1.0 - static_cast<double>(p.n_fock)));
        for (std::size_t i = 0; i + 1 < p.n_fock; ++i) err = std::max(err, std::abs(c(i, i) - 1.0));
        return CheckOutcome{"ladder_truncation", err < 1e-12, "max error " + fmt(err)};
    }));

    out.push_back(guarded("subsystems_commute", [&] {
        const ComplexMatrix x = lift_qubit(random_matrix(2, rng), layout);
        const ComplexMatrix y = lift_magnon(random_matrix(p.n_fock, rng), layout);
        const double err = max_abs(commutator(x, y));
        return CheckOutcome{"subsystems_commute", err < 1e-12, "max |[X,Y]| " + fmt(err)};
    }));

    const ComplexMatrix h = build_hamiltonian(p);
    const auto terms = build_dissipators(p, layout);
    const ComplexMatrix l = liouvillian_matrix(h, terms);
    const std::size_t d = layout.total_dim();

    out.push_back(guarded("hamiltonian_hermitian", [&] {
        const double err = hermiticity_error(h);
        return CheckOutcome{"hamiltonian_hermitian", err == 0.0, "max |H - H^dag| " + fmt(err)};
    }));

    out.push_back(guarded("trace_preservation", [&] {
        double err = 0.0;
        for (std::size_t col = 0; col < l.cols(); ++col) {
            Complex acc{};
            for (std::size_t k = 0; k < d; ++k) acc += l(k * d + k, col);
            err = std::max(err, std::abs(acc));
        }
        return CheckOutcome{"trace_preservation", err < 1e-10, "max |vec(I)^dag L| " + fmt(err)};
    }));

    out.push_back(guarded("dual_path_generator", [&] {
        const MasterEquation equation(h, terms);
        double err = 0.0;
        for (int i = 0; i < 100; ++i) {
            const ComplexMatrix rho = random_density(d, rng);
            err = std::max(err, max_abs_diff(unvec(matvec(l, vec(rho)), d), equation.rhs(rho)));
        }
        return CheckOutcome{"dual_path_generator", err < 1e-10, "max difference " + fmt(err)};
    }));

    out.push_back(guarded("dissipative_spectrum", [&] {
        double max_re = -std::numeric_limits<double>::infinity();
        double min_abs = std::numeric_limits<double>::infinity();
        for (const Complex& z : eigenvalues(l)) {
            max_re = std::max(max_re, z.real());
            min_abs = std::min(min_abs, std::abs(z));
        }
        return CheckOutcome{"dissipative_spectrum", max_re <= 1e-9 && min_abs < 1e-10,
                            "max Re " + fmt(max_re) + ", min |lambda| " + fmt(min_abs)};
    }));

    const SteadyStateResult direct = solve_steady_state(p);

    out.push_back(guarded("steady_state_physical", [&] {
        const PhysicalityReport r = check_physicality(direct);
        return CheckOutcome{"steady_state_physical", r.ok(),
                            "trace err " + fmt(r.trace_error) + ", herm err " + fmt(r.hermiticity_error) +
                                ", min eig " + fmt(r.min_eigenvalue) + ", residual " + fmt(r.residual_norm)};
    }));

    out.push_back(guarded("direct_vs_evolve", [&] {
        const SteadyStateResult evolved = solve_steady_state(p, SolveMethod::kEvolve);
        const double err = max_abs_diff(direct.rho_ss, evolved.rho_ss);
        return CheckOutcome{"direct_vs_evolve", err < 1e-6, "max difference " + fmt(err)};
    }));

    out.push_back(guarded("truncation_converged", [&] {
        const auto quantity = direct.g2_zero ? TruncationQuantity::kG2 : TruncationQuantity::kMeanMagnon;
        const TruncationReport r = truncation_converged(p, quantity, 1e-4);
        return CheckOutcome{"truncation_converged", r.converged,
                            "n_fock " + std::to_string(r.n_fock_low) + " -> " + fmt(r.value_low.value_or(0.0)) +
                                ", n_fock " + std::to_string(r.n_fock_high) + " -> " +
                                fmt(r.value_high.value_or(0.0))};
    }));

    out.push_back(guarded("detailed_balance", [&] {
        SystemParams bath = p;
        bath.delta_m = bath.delta_q = bath.chi_qm = bath.omega_s = bath.omega_d = 0.0;
        bath.m_th = 0.5;
        bath.n_th = 0.0;
        bath.n_fock = std::max<std::size_t>(p.n_fock, 8);
        const SteadyStateResult r = solve_steady_state(bath);
        const double ratio = bath.m_th / (1.0 + bath.m_th);
        double err = 0.0;
        for (std::size_t n = 0; n + 3 < bath.n_fock; ++n) err = std::max(err, std::abs(r.p_n[n + 1] / r.p_n[n] - ratio));
        return CheckOutcome{"detailed_balance", err < 1e-6, "max ratio error " + fmt(err)};
    }));

    out.push_back(guarded("analytic_g2", [&] {
        const HilbertLayout big(10);
        const double fock = g2_zero(basis_projector(big, Qubit::kGround, 1), big);
        const double thermal = g2_zero(thermal_state(big, 0.1), big);
        const bool ok = fock == 0.0 && std::abs(thermal - 2.0) < 1e-3;
        return CheckOutcome{"analytic_g2", ok, "fock " + fmt(fock) + ", thermal " + fmt(thermal)};
    }));

    out.push_back(guarded("resonance_sign_symmetry", [&] {
        const auto single = single_magnon_detunings(p.delta_q, p.chi_qm, p.omega_s);
        const auto two = two_magnon_detunings(p.delta_q, p.chi_qm, p.omega_s);
        const bool ok = single[0].detuning == -single[1].detuning && single[2].detuning == -single[3].detuning &&
                        two[0].detuning == -two[1].detuning && two[2].detuning == -two[3].detuning;
        return CheckOutcome{"resonance_sign_symmetry", ok, ok ? "exact" : "asymmetric pair"};
    }));

    return out;
}

}  // namespace magblock
