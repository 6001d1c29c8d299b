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
#include <vector>

#include "magblock/complex_matrix.hpp"
#include "magblock/fock_space.hpp"

namespace magblock {

/// Model parameters. Frequencies and rates are in units of the reference
/// rate gamma; occupations are dimensionless.
struct SystemParams {
    double delta_m = 0.0;    // magnon detuning from the drive
    double delta_q = -20.0;  // dressed-qubit detuning from the control field
    double chi_qm = 20.0;    // dispersive qubit-magnon shift
    double omega_s = 15.0;   // qubit control strength
    double omega_d = 0.1;    // magnon drive Rabi frequency
    double kappa_m = 1.4;
    double kappa_q = 1.2;
    double kappa_1 = 1.0;
    /// Pure dephasing override. Unset means (kappa_1 + kappa_q) / 2.
    std::optional<double> kappa_phi;
    double n_th = 0.0;
    double m_th = 0.0;
    std::size_t n_fock = 6;
    /// Physical value of gamma in rad/s.
    double gamma_ref_hz = 6.283185307179586e6;

    /// Throws InvalidArgument naming the first offending field.
    void validate() const;

    double dephasing_rate() const { return kappa_phi.value_or(0.5 * (kappa_1 + kappa_q)); }

    HilbertLayout layout() const { return HilbertLayout(n_fock); }

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Dephasing convention kappa_phi = kappa_q - kappa_1 / 2, the usual
/// linewidth decomposition. Used for side-by-side reporting.
double standard_dephasing_rate(const SystemParams& p);

struct LindbladTerm {
    std::string process;
    double rate;
    ComplexMatrix jump;
};

ComplexMatrix build_hamiltonian(const SystemParams& p);

/// Five channels in fixed order: qubit relaxation, qubit excitation, qubit
/// pure dephasing, magnon relaxation, magnon excitation. Zero-rate channels
/// are kept.
std::vector<LindbladTerm> build_dissipators(const SystemParams& p, const HilbertLayout& layout);

/// d²×d² generator acting on column-stacked density matrices:
/// vec(drho/dt) = L · vec(rho).
ComplexMatrix liouvillian_matrix(const ComplexMatrix& h, const std::vector<LindbladTerm>& terms);

ComplexMatrix build_liouvillian(const SystemParams& p);

/// Matrix-form master equation right-hand side. Shares no code with
/// liouvillian_matrix; the two are cross-checked in tests.
class MasterEquation {
public:
    MasterEquation(ComplexMatrix h, const std::vector<LindbladTerm>& terms);

    std::size_t dim() const noexcept { return dim_; }
    ComplexMatrix rhs(const ComplexMatrix& rho) const;

private:
    struct Entry {
        std::size_t row;
        std::size_t col;
        Complex value;
    };
    using SparseOperator = std::vector<Entry>;

    struct Channel {
        double rate;
        SparseOperator jump;
        SparseOperator jump_dagger_jump;
    };

    static SparseOperator sparse(const ComplexMatrix& op);

    std::size_t dim_;
    SparseOperator h_;
    std::vector<Channel> channels_;
};

ComplexMatrix master_rhs(const ComplexMatrix& h, const std::vector<LindbladTerm>& terms,
                         const ComplexMatrix& rho);

}  // namespace magblock
