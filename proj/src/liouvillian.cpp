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

#include "magblock/liouvillian.hpp"

#include <cmath>
#include <string>

#include "magblock/errors.hpp"

namespace magblock {
namespace {

void require_finite(const char* name, double value) {
    if (!std::isfinite(value)) throw InvalidArgument(std::string(name) + " must be finite", name);
}

void require_positive(const char* name, double value) {
    require_finite(name, value);
    if (!(value > 0.0)) {
        throw InvalidArgument(std::string(name) + " must be > 0, got " + std::to_string(value), name);
    }
}

void require_nonnegative(const char* name, double value) {
    require_finite(name, value);
    if (value < 0.0) {
        throw InvalidArgument(std::string(name) + " must be >= 0, got " + std::to_string(value), name);
    }
}

}  // namespace

void SystemParams::validate() const {
    require_finite("delta_m", delta_m);
    require_finite("delta_q", delta_q);
    require_nonnegative("chi_qm", chi_qm);
    require_nonnegative("omega_s", omega_s);
    require_nonnegative("omega_d", omega_d);
    require_positive("kappa_m", kappa_m);
    require_positive("kappa_q", kappa_q);
    require_positive("kappa_1", kappa_1);
    if (kappa_phi) require_nonnegative("kappa_phi", *kappa_phi);
    require_nonnegative("n_th", n_th);
    require_nonnegative("m_th", m_th);
    if (n_fock < 2) throw InvalidArgument("n_fock must be >= 2, got " + std::to_string(n_fock), "n_fock");
    require_positive("gamma_ref_hz", gamma_ref_hz);
}

double standard_dephasing_rate(const SystemParams& p) { return p.kappa_q - 0.5 * p.kappa_1; }

ComplexMatrix build_hamiltonian(const SystemParams& p) {
    p.validate();
    const HilbertLayout layout = p.layout();
    const ComplexMatrix m = lift_magnon(annihilation(p.n_fock), layout);
    const ComplexMatrix md = dagger(m);
    const ComplexMatrix num = lift_magnon(number_operator(p.n_fock), layout);
    const ComplexMatrix sz = lift_qubit(sigma_z(), layout);
    const ComplexMatrix sx = lift_qubit(sigma_plus() + sigma_minus(), layout);

    // The static part of the dispersive shift is already folded into delta_q.
    ComplexMatrix h = p.delta_m * num;
    h += (0.5 * p.delta_q) * sz;
    h += p.chi_qm * matmul(num, sz);
    h += p.omega_s * sx;
    h += p.omega_d * (md + m);
    return h;
}

std::vector<LindbladTerm> build_dissipators(const SystemParams& p, const HilbertLayout& layout) {
    p.validate();
    if (layout.n_fock() != p.n_fock) {
        throw DimensionMismatch("build_dissipators: layout n_fock " + std::to_string(layout.n_fock()) +
                                " != params n_fock " + std::to_string(p.n_fock));
    }
    const ComplexMatrix m = lift_magnon(annihilation(p.n_fock), layout);
    std::vector<LindbladTerm> terms;
    terms.reserve(5);
    terms.push_back({"qubit_relaxation", p.kappa_1 * (1.0 + p.n_th), lift_qubit(sigma_minus(), layout)});
    terms.push_back({"qubit_excitation", p.kappa_1 * p.n_th, lift_qubit(sigma_plus(), layout)});
    terms.push_back({"qubit_dephasing", 2.0 * p.dephasing_rate(), lift_qubit(sigma_z(), layout)});
    terms.push_back({"magnon_relaxation", p.kappa_m * (1.0 + p.m_th), m});
    terms.push_back({"magnon_excitation", p.kappa_m * p.m_th, dagger(m)});
    return terms;
}

ComplexMatrix liouvillian_matrix(const ComplexMatrix& h, const std::vector<LindbladTerm>& terms) {
    if (!h.is_square()) throw DimensionMismatch("liouvillian_matrix: Hamiltonian must be square");
    const std::size_t d = h.rows();
    for (const auto& term : terms) {
        if (term.jump.rows() != d || term.jump.cols() != d) {
            throw DimensionMismatch("liouvillian_matrix: jump operator '" + term.process +
                                    "' does not match Hamiltonian dimension");
        }
        if (!(term.rate >= 0.0)) throw InvalidArgument("liouvillian_matrix: negative rate for " + term.process);
    }

    const ComplexMatrix id = identity(d);
    const Complex minus_i{0.0, -1.0};
    ComplexMatrix l = minus_i * (kron(id, h) - kron(transpose(h), id));
    for (const auto& term : terms) {
        if (term.rate == 0.0) continue;
        const ComplexMatrix jdj = matmul(dagger(term.jump), term.jump);
        ComplexMatrix piece = kron(conjugate(term.jump), term.jump);
        piece -= 0.5 * kron(id, jdj);
        piece -= 0.5 * kron(transpose(jdj), id);
        l += term.rate * std::move(piece);
    }
    return l;
}

ComplexMatrix build_liouvillian(const SystemParams& p) {
    return liouvillian_matrix(build_hamiltonian(p), build_dissipators(p, p.layout()));
}

MasterEquation::SparseOperator MasterEquation::sparse(const ComplexMatrix& op) {
    SparseOperator out;
    for (std::size_t r = 0; r < op.rows(); ++r)
        for (std::size_t c = 0; c < op.cols(); ++c)
            if (op(r, c) != Complex{}) out.push_back({r, c, op(r, c)});
    return out;
}

MasterEquation::MasterEquation(ComplexMatrix h, const std::vector<LindbladTerm>& terms)
    : dim_(h.rows()) {
    if (!h.is_square()) throw DimensionMismatch("master equation: Hamiltonian must be square");
    h_ = sparse(h);
    for (const auto& term : terms) {
        if (term.jump.rows() != dim_ || term.jump.cols() != dim_) {
            throw DimensionMismatch("master equation: jump operator '" + term.process +
                                    "' does not match Hamiltonian dimension");
        }
        if (!(term.rate >= 0.0)) throw InvalidArgument("master equation: negative rate for " + term.process);
        if (term.rate == 0.0) continue;
        channels_.push_back({term.rate, sparse(term.jump), sparse(matmul(dagger(term.jump), term.jump))});
    }
}

ComplexMatrix MasterEquation::rhs(const ComplexMatrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
        throw DimensionMismatch("master equation: density matrix does not match Hamiltonian dimension");
    }
    const std::size_t d = dim_;
    ComplexMatrix out(d, d);
    const Complex minus_i{0.0, -1.0};

    // -i[H, rho]
    for (const auto& [r, c, v] : h_) {
        const Complex a = minus_i * v;
        for (std::size_t j = 0; j < d; ++j) out(r, j) += a * rho(c, j);
        for (std::size_t i = 0; i < d; ++i) out(i, c) -= a * rho(i, r);
    }
    // rate * (J rho J^dag - {J^dag J, rho} / 2)
    for (const auto& ch : channels_) {
        for (const auto& [a, i, x] : ch.jump) {
            for (const auto& [b, j, y] : ch.jump) out(a, b) += ch.rate * x * rho(i, j) * std::conj(y);
        }
        for (const auto& [r, c, v] : ch.jump_dagger_jump) {
            const Complex w = -0.5 * ch.rate * v;
            for (std::size_t j = 0; j < d; ++j) out(r, j) += w * rho(c, j);
            for (std::size_t i = 0; i < d; ++i) out(i, c) += w * rho(i, r);
        }
    }
    return out;
}

ComplexMatrix master_rhs(const ComplexMatrix& h, const std::vector<LindbladTerm>& terms,
                         const ComplexMatrix& rho) {
    return MasterEquation(h, terms).rhs(rho);
}

}  // namespace magblock
