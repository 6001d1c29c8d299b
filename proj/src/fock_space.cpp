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

#include "magblock/fock_space.hpp"

#include <cmath>
#include <string>

#include "magblock/errors.hpp"

namespace magblock {

HilbertLayout::HilbertLayout(std::size_t n_fock) : n_fock_(n_fock) {
    if (n_fock < 2) throw InvalidArgument("n_fock must be at least 2, got " + std::to_string(n_fock));
}

std::size_t HilbertLayout::index(Qubit q, std::size_t n) const {
    if (n >= n_fock_) {
        throw InvalidArgument("Fock index " + std::to_string(n) + " outside truncation " +
                              std::to_string(n_fock_));
    }
    return static_cast<std::size_t>(q) * n_fock_ + n;
}

ComplexMatrix annihilation(std::size_t n_fock) {
    if (n_fock < 2) throw InvalidArgument("annihilation: n_fock must be at least 2");
    ComplexMatrix out(n_fock, n_fock);
    for (std::size_t n = 1; n < n_fock; ++n) out(n - 1, n) = std::sqrt(static_cast<double>(n));
    return out;
}

ComplexMatrix creation(std::size_t n_fock) { return dagger(annihilation(n_fock)); }

ComplexMatrix number_operator(std::size_t n_fock) {
    if (n_fock < 2) throw InvalidArgument("number_operator: n_fock must be at least 2");
    ComplexMatrix out(n_fock, n_fock);
    for (std::size_t n = 0; n < n_fock; ++n) out(n, n) = static_cast<double>(n);
    return out;
}

ComplexMatrix sigma_minus() { return ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}; }
ComplexMatrix sigma_plus() { return ComplexMatrix{{0.0, 0.0}, {1.0, 0.0}}; }
ComplexMatrix sigma_z() { return ComplexMatrix{{-1.0, 0.0}, {0.0, 1.0}}; }

ComplexMatrix lift_qubit(const ComplexMatrix& op2, const HilbertLayout& layout) {
    if (op2.rows() != 2 || op2.cols() != 2) {
        throw DimensionMismatch("lift_qubit: operator must be 2x2");
    }
    return kron(op2, identity(layout.n_fock()));
}

ComplexMatrix lift_magnon(const ComplexMatrix& opN, const HilbertLayout& layout) {
    if (opN.rows() != layout.n_fock() || opN.cols() != layout.n_fock()) {
        throw DimensionMismatch("lift_magnon: operator must be " + std::to_string(layout.n_fock()) +
                                "x" + std::to_string(layout.n_fock()));
    }
    return kron(identity(2), opN);
}

ComplexMatrix basis_projector(const HilbertLayout& layout, Qubit q, std::size_t n) {
    ComplexMatrix out(layout.total_dim(), layout.total_dim());
    const std::size_t k = layout.index(q, n);
    out(k, k) = 1.0;
    return out;
}

}  // namespace magblock
