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

#include <span>
#include <vector>

#include "magblock/complex_matrix.hpp"

namespace magblock {

struct LinearSolution {
    std::vector<Complex> x;
    /// LU reciprocal condition estimate of the system matrix.
    double rcond;
};

/// Solves a·x = b by partial-pivot LU.
LinearSolution lu_solve(const ComplexMatrix& a, std::span<const Complex> b);

/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// Eigenvalues of a general square matrix, unordered.
std::vector<Complex> eigenvalues(const ComplexMatrix& a);

/// Largest singular value, estimated by power iteration on a†a.
double spectral_norm_estimate(const ComplexMatrix& a, int iterations = 60);

}  // namespace magblock
