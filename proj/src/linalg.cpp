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

#include "magblock/linalg.hpp"

#include <algorithm>

#include <cmath>

#include <Eigen/Dense>

#include "magblock/errors.hpp"

namespace magblock {
namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const EigenMatrix> view(const ComplexMatrix& a) {
    return {a.entries().data(), static_cast<Eigen::Index>(a.rows()),
            static_cast<Eigen::Index>(a.cols())};
}

void require_square(const ComplexMatrix& a, const char* op) {
    if (!a.is_square()) throw DimensionMismatch(std::string(op) + ": matrix must be square");
}

}  // namespace

LinearSolution lu_solve(const ComplexMatrix& a, std::span<const Complex> b) {
    require_square(a, "lu_solve");
    if (b.size() != a.rows()) throw DimensionMismatch("lu_solve: right-hand side length mismatch");
    const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(view(a));
    const Eigen::Map<const Eigen::VectorXcd> rhs(b.data(), static_cast<Eigen::Index>(b.size()));
    const Eigen::VectorXcd x = lu.solve(rhs);
    // Eigen's estimate misses exact zero pivots; the pivot ratio bounds 1/cond(U) from above.
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double ratio = pivots.maxCoeff() > 0.0 ? pivots.minCoeff() / pivots.maxCoeff() : 0.0;
    return {std::vector<Complex>(x.data(), x.data() + x.size()), std::min(lu.rcond(), ratio)};
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    require_square(a, "hermitian_eigenvalues");
    const Eigen::MatrixXcd m = view(a);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> eigenvalues(const ComplexMatrix& a) {
    require_square(a, "eigenvalues");
    const Eigen::MatrixXcd m = view(a);
    const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

double spectral_norm_estimate(const ComplexMatrix& a, int iterations) {
    const ComplexMatrix ad = dagger(a);
    // Fixed non-symmetric start vector so no eigenvector is missed by symmetry.
    std::vector<Complex> v(a.cols());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Complex(1.0 + 0.37 * static_cast<double>(i % 7), 0.11 * static_cast<double>(i % 5));
    double sigma = 0.0;
    for (int it = 0; it < iterations; ++it) {
        double norm = 0.0;
        for (const auto& z : v) norm += std::norm(z);
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (auto& z : v) z /= norm;
        const std::vector<Complex> av = matvec(a, v);
        double av_norm = 0.0;
        for (const auto& z : av) av_norm += std::norm(z);
        sigma = std::sqrt(av_norm);
        v = matvec(ad, av);
    }
    return sigma;
}

}  // namespace magblock
