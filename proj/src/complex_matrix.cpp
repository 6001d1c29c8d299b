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

#include <algorithm>
#include <cmath>
#include <string>

#include "magblock/errors.hpp"

namespace magblock {
namespace {

std::string shape(const ComplexMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(op) + ": " + shape(a) + " vs " + shape(b));
    }
}

void require_square(const ComplexMatrix& a, const char* op) {
    if (!a.is_square()) throw DimensionMismatch(std::string(op) + ": non-square " + shape(a));
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
    entries_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
    if (entries_.size() != rows * cols) {
        throw DimensionMismatch("entry count " + std::to_string(entries_.size()) +
                                " does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
    }
    if (!all_finite()) throw InvalidArgument("matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) throw InvalidArgument("matrix dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (!all_finite()) throw InvalidArgument("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    ComplexMatrix out(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out(i, i) = values[i];
    return out;
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "add");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "subtract");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : entries_) z *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

ComplexMatrix identity(std::size_t dim) {
    if (dim == 0) throw InvalidArgument("identity: dimension must be at least 1");
    ComplexMatrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
    return out;
}

ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
    return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix out = a;
    for (auto& z : out.entries()) z = std::conj(z);
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: " + shape(a) + " times " + shape(b));
    }
    ComplexMatrix out(a.rows(), b.cols());
    const std::size_t n = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex* out_row = &out(i, 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            const Complex* b_row = &b(k, 0);
            for (std::size_t j = 0; j < n; ++j) out_row[j] += aik * b_row[j];
        }
    }
    return out;
}

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x) {
    if (a.cols() != x.size()) {
        throw DimensionMismatch("matvec: " + shape(a) + " times vector of length " +
                                std::to_string(x.size()));
    }
    std::vector<Complex> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc{};
        const Complex* row = &a(i, 0);
        for (std::size_t k = 0; k < x.size(); ++k) acc += row[k] * x[k];
        out[i] = acc;
    }
    return out;
}

ComplexMatrix add_scaled(const ComplexMatrix& a, Complex c, const ComplexMatrix& b) {
    require_same_shape(a, b, "add_scaled");
    ComplexMatrix out = a;
    auto dst = out.entries();
    auto src = b.entries();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "kron");
    require_square(b, "kron");
    const std::size_t na = a.rows();
    const std::size_t nb = b.rows();
    ComplexMatrix out(na * nb, na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b) - matmul(b, a);
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b) + matmul(b, a);
}

Complex trace(const ComplexMatrix& a) {
    require_square(a, "trace");
    Complex acc{};
    for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
    return acc;
}

Complex expectation(const ComplexMatrix& op, const ComplexMatrix& rho) {
    require_square(op, "expectation");
    require_same_shape(op, rho, "expectation");
    Complex acc{};
    const std::size_t n = op.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) acc += op(i, k) * rho(k, i);
    return acc;
}

double frobenius_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (const auto& z : a.entries()) acc += std::norm(z);
    return std::sqrt(acc);
}

double max_abs(const ComplexMatrix& a) {
    double out = 0.0;
    for (const auto& z : a.entries()) out = std::max(out, std::abs(z));
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double out = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        out = std::max(out, std::abs(a.entries()[i] - b.entries()[i]));
    return out;
}

double hermiticity_error(const ComplexMatrix& a) {
    require_square(a, "hermiticity_error");
    double out = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = r; c < a.cols(); ++c)
            out = std::max(out, std::abs(a(r, c) - std::conj(a(c, r))));
    return out;
}

std::vector<Complex> vec(const ComplexMatrix& rho) {
    std::vector<Complex> out(rho.rows() * rho.cols());
    for (std::size_t c = 0; c < rho.cols(); ++c)
        for (std::size_t r = 0; r < rho.rows(); ++r) out[c * rho.rows() + r] = rho(r, c);
    return out;
}

ComplexMatrix unvec(std::span<const Complex> v, std::size_t dim) {
    if (dim == 0 || v.size() != dim * dim) {
        throw DimensionMismatch("unvec: vector of length " + std::to_string(v.size()) +
                                " is not " + std::to_string(dim) + "^2");
    }
    ComplexMatrix out(dim, dim);
    for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t r = 0; r < dim; ++r) out(r, c) = v[c * dim + r];
    return out;
}

}  // namespace magblock
