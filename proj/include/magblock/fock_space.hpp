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

#include <cstddef>

#include "magblock/complex_matrix.hpp"

namespace magblock {

enum class Qubit : std::size_t { kGround = 0, kExcited = 1 };

/// Joint qubit ⊗ truncated-magnon space. Basis state |q, n> sits at index
/// q·n_fock + n (qubit-major); this ordering is fixed throughout the library.
class HilbertLayout {
public:
    explicit HilbertLayout(std::size_t n_fock);

    std::size_t n_fock() const noexcept { return n_fock_; }
    std::size_t total_dim() const noexcept { return 2 * n_fock_; }

    std::size_t index(Qubit q, std::size_t n) const;

    friend bool operator==(const HilbertLayout&, const HilbertLayout&) = default;

private:
    std::size_t n_fock_;
};

/// Magnon lowering operator on states |0>..|n_fock-1>: entry (n-1, n) = sqrt(n).
ComplexMatrix annihilation(std::size_t n_fock);
ComplexMatrix creation(std::size_t n_fock);
ComplexMatrix number_operator(std::size_t n_fock);

// Qubit operators in the basis |g> = 0, |e> = 1.
ComplexMatrix sigma_minus();
ComplexMatrix sigma_plus();
ComplexMatrix sigma_z();

/// op2 ⊗ 1_magnon
ComplexMatrix lift_qubit(const ComplexMatrix& op2, const HilbertLayout& layout);
/// 1_qubit ⊗ opN
ComplexMatrix lift_magnon(const ComplexMatrix& opN, const HilbertLayout& layout);

/// |q, n><q, n| on the joint space.
ComplexMatrix basis_projector(const HilbertLayout& layout, Qubit q, std::size_t n);

}  // namespace magblock
