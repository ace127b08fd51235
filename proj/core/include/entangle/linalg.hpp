// Copyright 2026 The Entangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Small dense complex linear algebra. Everything here targets matrices of a
// few dozen rows at most; nothing is blocked or vectorized.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace entangle {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix with value semantics.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    /// Zero-initialized rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of row-major entries; throws InvalidInput when the
    /// count does not match or an entry is not finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> data() const noexcept { return data_; }
    std::span<Complex> data() noexcept { return data_; }

    ComplexVector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Complex> values);

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    bool all_finite() const noexcept;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    ComplexVector data_;
};

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);
ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

/// Dense row-major real matrix, used for probability tables.
class RealMatrix {
   public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> data() const noexcept { return data_; }

    double sum() const noexcept;

    friend bool operator==(const RealMatrix &, const RealMatrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct SvdResult {
    ComplexMatrix u;    // rows x k, orthonormal columns
    RealVector sigma;   // k = min(rows, cols), descending, >= 0
    ComplexMatrix v;    // cols x k, orthonormal columns
};

struct EigResult {
    RealVector eigenvalues;     // descending
    ComplexMatrix eigenvectors; // columns, orthonormal
};

double frobenius_norm(const ComplexMatrix &m);
double vector_norm(std::span<const Complex> v);
Complex inner_product(std::span<const Complex> lhs, std::span<const Complex> rhs);

/// Thin SVD  C = U diag(sigma) V^dagger  by one-sided Jacobi rotations.
/// Ties in sigma keep their pre-sort column order. Throws InvalidInput on
/// non-finite or empty input and NumericalFailure if 100*max(rows, cols)
/// sweeps do not converge.
SvdResult svd(const ComplexMatrix &c);

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.
/// Requires ||M - M^dagger||_F <= 1e-9 ||M||_F.
EigResult hermitian_eig(const ComplexMatrix &m);

/// True when ||U^dagger U - I||_F <= tolerance.
bool is_unitary(const ComplexMatrix &u, double tolerance = 1e-9);

/// Modified Gram-Schmidt on the columns, in order. Throws NumericalFailure
/// if a column is (numerically) in the span of the previous ones.
ComplexMatrix orthonormalize_columns(const ComplexMatrix &m);

}  // namespace entangle
