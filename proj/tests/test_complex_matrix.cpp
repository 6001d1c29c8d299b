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

#include "magblock/complex_matrix.hpp"

#include <gtest/gtest.h>

#include "magblock/errors.hpp"
#include "test_support.hpp"

namespace magblock {
namespace {

using testing::random_matrix;

TEST(ComplexMatrix, IdentityAndTrace) {
    EXPECT_EQ(identity(2), (ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}}));
    EXPECT_EQ(identity(1), (ComplexMatrix{{1.0}}));
    EXPECT_EQ(trace(identity(6)), Complex(6.0));
    EXPECT_THROW(identity(0), InvalidArgument);
}

TEST(ComplexMatrix, RejectsNonFiniteAndMismatchedEntries) {
    EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionMismatch);
    EXPECT_THROW(ComplexMatrix(1, 1, {Complex(std::nan(""), 0.0)}), InvalidArgument);
    EXPECT_THROW(ComplexMatrix(0, 3), InvalidArgument);
}

TEST(ComplexMatrix, KronExamples) {
    EXPECT_EQ(kron(identity(2), identity(3)), identity(6));
    const ComplexMatrix sz{{-1.0, 0.0}, {0.0, 1.0}};
    const std::vector<Complex> diag{-1.0, -1.0, 1.0, 1.0};
    EXPECT_EQ(kron(sz, identity(2)), ComplexMatrix::diagonal(diag));
    EXPECT_THROW(kron(ComplexMatrix(2, 3), identity(2)), DimensionMismatch);
}

TEST(ComplexMatrix, KronTraceIsMultiplicative) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const ComplexMatrix a = random_matrix(2, rng);
        const ComplexMatrix b = random_matrix(2, rng);
        EXPECT_LT(std::abs(trace(kron(a, b)) - trace(a) * trace(b)), 1e-12);
    }
}

TEST(ComplexMatrix, KronIsAssociative) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        const ComplexMatrix a = random_matrix(2, rng);
        const ComplexMatrix b = random_matrix(3, rng);
        const ComplexMatrix c = random_matrix(2, rng);
        EXPECT_LT(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
    }
}

TEST(ComplexMatrix, DaggerProperties) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const ComplexMatrix a = random_matrix(5, rng);
        const ComplexMatrix b = random_matrix(5, rng);
        EXPECT_EQ(dagger(dagger(a)), a);
        EXPECT_LT(max_abs_diff(dagger(matmul(a, b)), matmul(dagger(b), dagger(a))), 1e-12);
    }
}

TEST(ComplexMatrix, TraceCyclicityAndExpectation) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        const ComplexMatrix a = random_matrix(6, rng);
        const ComplexMatrix b = random_matrix(6, rng);
        EXPECT_LT(std::abs(trace(matmul(a, b)) - trace(matmul(b, a))), 1e-12);
        EXPECT_LT(std::abs(expectation(a, b) - trace(matmul(a, b))), 1e-12);
        EXPECT_LT(std::abs(expectation(identity(6), b) - trace(b)), 1e-12);
    }
}

TEST(ComplexMatrix, AddScaledAndMismatch) {
    const ComplexMatrix a{{1.0, 2.0}, {3.0, 4.0}};
    const ComplexMatrix b{{0.0, 1.0}, {1.0, 0.0}};
    EXPECT_EQ(add_scaled(a, Complex(0.0, 2.0), b),
              (ComplexMatrix{{1.0, Complex(2.0, 2.0)}, {Complex(3.0, 2.0), 4.0}}));
    EXPECT_THROW(add_scaled(a, 1.0, identity(3)), DimensionMismatch);
    EXPECT_THROW(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), DimensionMismatch);
    EXPECT_THROW(trace(ComplexMatrix(2, 3)), DimensionMismatch);
}

TEST(ComplexMatrix, ColumnStackingVectorization) {
    const ComplexMatrix rho{{1.0, 2.0}, {3.0, 4.0}};
    const std::vector<Complex> expected{1.0, 3.0, 2.0, 4.0};
    EXPECT_EQ(vec(rho), expected);
    EXPECT_EQ(unvec(expected, 2), rho);
    EXPECT_THROW(unvec(expected, 3), DimensionMismatch);

    // vec(A X B) = (B^T ⊗ A) vec(X)
    std::mt19937_64 rng(5);
    const ComplexMatrix a = random_matrix(3, rng);
    const ComplexMatrix x = random_matrix(3, rng);
    const ComplexMatrix b = random_matrix(3, rng);
    const auto lhs = vec(matmul(matmul(a, x), b));
    const auto rhs = matvec(kron(transpose(b), a), vec(x));
    for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_LT(std::abs(lhs[i] - rhs[i]), 1e-12);
}

}  // namespace
}  // namespace magblock
