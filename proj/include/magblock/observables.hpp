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

#include <vector>

#include "magblock/complex_matrix.hpp"
#include "magblock/fock_space.hpp"

namespace magblock {

/// Mean magnon populations below this are treated as zero for g2(0).
inline constexpr double kMinMagnonPopulation = 1e-12;

double mean_magnon(const ComplexMatrix& rho, const HilbertLayout& layout);

/// Tr(m†m†mm rho) / Tr(m†m rho)². Throws UndefinedCorrelation when the
/// magnon population is below kMinMagnonPopulation.
double g2_zero(const ComplexMatrix& rho, const HilbertLayout& layout);

/// P_n summed over both qubit states. Entries within -1e-10 of zero are
/// clamped; anything more negative throws InvalidArgument.
std::vector<double> magnon_distribution(const ComplexMatrix& rho, const HilbertLayout& layout);

/// Total excited-state population of the qubit.
double qubit_excitation(const ComplexMatrix& rho, const HilbertLayout& layout);

namespace physical {
inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K
inline constexpr double kTwoPi = 6.283185307179586;
}  // namespace physical

/// Bose-Einstein occupation 1 / (exp(h f / k_B T) - 1) for an ordinary
/// frequency f in Hz. Returns exactly 0 once h f / k_B T exceeds 700.
double thermal_occupation(double freq_hz, double temperature_k);

/// Temperature at which a mode of frequency freq_hz has occupation n.
double temperature_for_occupation(double freq_hz, double occupation);

struct ThermalSpec {
    double temperature_k;
    double omega_m_hz;
    double omega_q_hz;

    void validate() const;
    double magnon_occupation() const;
    double qubit_occupation() const;
};

}  // namespace magblock
