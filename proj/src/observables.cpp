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

#include "magblock/observables.hpp"

#include <cmath>
#include <string>

#include "magblock/errors.hpp"

namespace magblock {
namespace {

void require_state(const ComplexMatrix& rho, const HilbertLayout& layout, const char* op) {
    if (rho.rows() != layout.total_dim() || rho.cols() != layout.total_dim()) {
        throw DimensionMismatch(std::string(op) + ": density matrix is " + std::to_string(rho.rows()) +
                                "x" + std::to_string(rho.cols()) + ", layout expects " +
                                std::to_string(layout.total_dim()));
    }
}

}  // namespace

double mean_magnon(const ComplexMatrix& rho, const HilbertLayout& layout) {
    require_state(rho, layout, "mean_magnon");
    const ComplexMatrix num = lift_magnon(number_operator(layout.n_fock()), layout);
    return expectation(num, rho).real();
}

double g2_zero(const ComplexMatrix& rho, const HilbertLayout& layout) {
    require_state(rho, layout, "g2_zero");
    const ComplexMatrix m = lift_magnon(annihilation(layout.n_fock()), layout);
    const ComplexMatrix md = dagger(m);
    const double n1 = expectation(matmul(md, m), rho).real();
    if (!(n1 >= kMinMagnonPopulation)) {
        throw UndefinedCorrelation("g2(0) undefined: mean magnon number " + std::to_string(n1));
    }
    const double n2 = expectation(matmul(matmul(md, md), matmul(m, m)), rho).real();
    return n2 / (n1 * n1);
}

std::vector<double> magnon_distribution(const ComplexMatrix& rho, const HilbertLayout& layout) {
    require_state(rho, layout, "magnon_distribution");
    std::vector<double> p(layout.n_fock(), 0.0);
    for (std::size_t n = 0; n < layout.n_fock(); ++n) {
        double value = rho(layout.index(Qubit::kGround, n), layout.index(Qubit::kGround, n)).real() +
                       rho(layout.index(Qubit::kExcited, n), layout.index(Qubit::kExcited, n)).real();
        if (value < -1e-10) {
            throw InvalidArgument("magnon_distribution: P_" + std::to_string(n) + " = " +
                                  std::to_string(value) + " is negative");
        }
        p[n] = value < 0.0 ? 0.0 : value;
    }
    return p;
}

double qubit_excitation(const ComplexMatrix& rho, const HilbertLayout& layout) {
    require_state(rho, layout, "qubit_excitation");
    double acc = 0.0;
    for (std::size_t n = 0; n < layout.n_fock(); ++n) {
        const std::size_t k = layout.index(Qubit::kExcited, n);
        acc += rho(k, k).real();
    }
    return acc;
}

double thermal_occupation(double freq_hz, double temperature_k) {
    if (!(freq_hz > 0.0) || !(temperature_k > 0.0)) {
        throw InvalidArgument("thermal_occupation: frequency and temperature must be > 0");
    }
    const double x = physical::kPlanck * freq_hz / (physical::kBoltzmann * temperature_k);
    if (x > 700.0) return 0.0;
    return 1.0 / std::expm1(x);
}

double temperature_for_occupation(double freq_hz, double occupation) {
    if (!(freq_hz > 0.0) || !(occupation > 0.0)) {
        throw InvalidArgument("temperature_for_occupation: frequency and occupation must be > 0");
    }
    return physical::kPlanck * freq_hz / (physical::kBoltzmann * std::log1p(1.0 / occupation));
}

void ThermalSpec::validate() const {
    if (!(temperature_k > 0.0)) throw InvalidArgument("temperature_k must be > 0");
    if (!(omega_m_hz > 0.0)) throw InvalidArgument("omega_m_hz must be > 0");
    if (!(omega_q_hz > 0.0)) throw InvalidArgument("omega_q_hz must be > 0");
}

double ThermalSpec::magnon_occupation() const {
    validate();
    return thermal_occupation(omega_m_hz, temperature_k);
}

double ThermalSpec::qubit_occupation() const {
    validate();
    return thermal_occupation(omega_q_hz, temperature_k);
}

}  // namespace magblock
