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

#include "entangle/linalg.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "entangle/error.hpp"

namespace entangle {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInput(std::string("shape mismatch in ") + op);
    }
}

// 2x2 unitary G with G^dagger [[app, b], [conj(b), aqq]] G diagonal.
// G = diag(1, e^{-i arg b}) * [[c, s], [-s, c]], the real rotation being the
// classic Jacobi choice of the smaller angle.
struct Rotation {
    Complex pp, pq, qp, qq;
};

Rotation jacobi_rotation(double app, double aqq, Complex b) {
    const double mag = std::abs(b);
    const Complex phase = std::conj(b) / mag;  // e^{-i arg b}
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    return {Complex(c), Complex(s), -s * phase, c * phase};
}

// A <- A G on columns p, q.
void rotate_columns(ComplexMatrix &a, std::size_t p, std::size_t q, const Rotation &g) {
    for (std::size_t k = 0; k < a.rows(); ++k) {
        const Complex x = a(k, p);
        const Complex y = a(k, q);
        a(k, p) = x * g.pp + y * g.qp;
        a(k, q) = x * g.pq + y * g.qq;
    }
}

// A <- G^dagger A on rows p, q.
void rotate_rows(ComplexMatrix &a, std::size_t p, std::size_t q, const Rotation &g) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Complex x = a(p, k);
        const Complex y = a(q, k);
        a(p, k) = std::conj(g.pp) * x + std::conj(g.qp) * y;
        a(q, k) = std::conj(g.pq) * x + std::conj(g.qq) * y;
    }
}

// Indices that sort `values` descending; equal values keep their order.
std::vector<std::size_t> descending_order(const RealVector &values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return order;
}

double column_norm_sq(const ComplexMatrix &a, std::size_t c) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.rows(); ++k) s += std::norm(a(k, c));
    return s;
}

Complex column_inner(const ComplexMatrix &a, std::size_t p, std::size_t q) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < a.rows(); ++k) s += std::conj(a(k, p)) * a(k, q);
    return s;
}

// Removes from v its components along the first `count` columns of basis.
void project_out(ComplexVector &v, const ComplexMatrix &basis, std::span<const std::size_t> columns) {
    for (std::size_t c : columns) {
        Complex overlap = 0.0;
        for (std::size_t k = 0; k < v.size(); ++k) overlap += std::conj(basis(k, c)) * v[k];
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= overlap * basis(k, c);
    }
}

// One-sided Jacobi for rows >= cols.
SvdResult svd_tall(const ComplexMatrix &c) {
    const std::size_t m = c.rows();
    const std::size_t n = c.cols();
    ComplexMatrix w = c;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double tol = static_cast<double>(m) * DBL_EPSILON;
    const std::size_t max_sweeps = 100 * std::max(m, n);

    bool converged = n < 2;
    for (std::size_t sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        std::size_t rotations = 0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = column_norm_sq(w, p);
                const double beta = column_norm_sq(w, q);
                const Complex gamma = column_inner(w, p, q);
                const double mag = std::abs(gamma);
                if (mag == 0.0 || mag <= tol * std::sqrt(alpha * beta)) continue;
                const Rotation g = jacobi_rotation(alpha, beta, gamma);
                rotate_columns(w, p, q, g);
                rotate_columns(v, p, q, g);
                ++rotations;
            }
        }
        converged = rotations == 0;
    }
    if (!converged) {
        throw NumericalFailure("SVD did not converge within " + std::to_string(max_sweeps) + " sweeps");
    }

    RealVector norms(n);
    for (std::size_t j = 0; j < n; ++j) norms[j] = std::sqrt(column_norm_sq(w, j));
    const auto order = descending_order(norms);

    SvdResult out{ComplexMatrix(m, n), RealVector(n), ComplexMatrix(n, n)};
    std::vector<std::size_t> filled;
    std::vector<std::size_t> empty;
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.sigma[j] = norms[src];
        for (std::size_t k = 0; k < n; ++k) out.v(k, j) = v(k, src);
        if (norms[src] > DBL_MIN) {
            for (std::size_t k = 0; k < m; ++k) out.u(k, j) = w(k, src) / norms[src];
            filled.push_back(j);
        } else {
            out.sigma[j] = 0.0;
            empty.push_back(j);
        }
    }

    // Complete U for exactly-zero singular values from the standard basis.
    std::size_t candidate = 0;
    for (std::size_t j : empty) {
        while (candidate < m) {
            ComplexVector e(m, 0.0);
            e[candidate++] = 1.0;
            project_out(e, out.u, filled);
            project_out(e, out.u, filled);
            const double norm = vector_norm(e);
            if (norm > 0.5) {
                for (std::size_t k = 0; k < m; ++k) out.u(k, j) = e[k] / norm;
                filled.push_back(j);
                break;
            }
        }
    }
    return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw InvalidInput("expected " + std::to_string(rows * cols) + " entries, got " +
                           std::to_string(data_.size()));
    }
    if (!all_finite()) throw InvalidInput("matrix has non-finite entries");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!all_finite()) throw InvalidInput("matrix has non-finite entries");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const {
    ComplexVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const Complex> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto &z : out.data_) z = std::conj(z);
    return out;
}

bool ComplexMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), finite);
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    if (lhs.cols() != rhs.rows()) throw InvalidInput("shape mismatch in matrix product");
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex(0.0)) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

double RealMatrix::sum() const noexcept { return std::accumulate(data_.begin(), data_.end(), 0.0); }

double frobenius_norm(const ComplexMatrix &m) { return vector_norm(m.data()); }

double vector_norm(std::span<const Complex> v) {
    // Scaled accumulation so tiny or huge entries do not under/overflow.
    double scale = 0.0;
    for (const Complex &z : v) scale = std::max({scale, std::abs(z.real()), std::abs(z.imag())});
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const Complex &z : v) sum += std::norm(z / scale);
    return scale * std::sqrt(sum);
}

Complex inner_product(std::span<const Complex> lhs, std::span<const Complex> rhs) {
    if (lhs.size() != rhs.size()) throw InvalidInput("inner product of vectors with different lengths");
    Complex s = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) s += std::conj(lhs[i]) * rhs[i];
    return s;
}

SvdResult svd(const ComplexMatrix &c) {
    if (c.rows() == 0 || c.cols() == 0) throw InvalidInput("SVD of an empty matrix");
    if (!c.all_finite()) throw InvalidInput("SVD input has non-finite entries");
    if (c.rows() >= c.cols()) return svd_tall(c);
    // C^dagger = U' S V'^dagger  =>  C = V' S U'^dagger.
    SvdResult t = svd_tall(c.adjoint());
    return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

EigResult hermitian_eig(const ComplexMatrix &m) {
    if (!m.is_square() || m.empty()) throw InvalidInput("eigendecomposition needs a non-empty square matrix");
    if (!m.all_finite()) throw InvalidInput("eigendecomposition input has non-finite entries");
    const double norm = frobenius_norm(m);
    if (frobenius_norm(m - m.adjoint()) > 1e-9 * norm) throw InvalidInput("matrix is not Hermitian");

    const std::size_t n = m.rows();
    ComplexMatrix a = 0.5 * (m + m.adjoint());
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (p != q) s += std::norm(a(p, q));
        return std::sqrt(s);
    };

    const std::size_t max_sweeps = 100 * n;
    bool converged = false;
    for (std::size_t sweep = 0; sweep <= max_sweeps; ++sweep) {
        if (off_norm() <= 1e-14 * norm) {
            converged = true;
            break;
        }
        if (sweep == max_sweeps) break;
        std::size_t rotations = 0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                if (std::abs(b) <= 1e-17 * norm) continue;
                const Rotation g = jacobi_rotation(a(p, p).real(), a(q, q).real(), b);
                rotate_columns(a, p, q, g);
                rotate_rows(a, p, q, g);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                rotate_columns(v, p, q, g);
                ++rotations;
            }
        }
        if (rotations == 0) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw NumericalFailure("eigendecomposition did not converge within " + std::to_string(max_sweeps) +
                               " sweeps");
    }

    RealVector diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    const auto order = descending_order(diag);
    EigResult out{RealVector(n), ComplexMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = diag[order[j]];
        for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, j) = v(k, order[j]);
    }
    return out;
}

bool is_unitary(const ComplexMatrix &u, double tolerance) {
    if (!u.is_square() || u.empty() || !u.all_finite()) return false;
    return frobenius_norm(u.adjoint() * u - ComplexMatrix::identity(u.rows())) <= tolerance;
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix &m) {
    ComplexMatrix out = m;
    std::vector<std::size_t> done;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        ComplexVector col = out.column(c);
        const double original = vector_norm(col);
        project_out(col, out, done);
        project_out(col, out, done);
        const double norm = vector_norm(col);
        if (norm <= 1e-12 * original || norm == 0.0) {
            throw NumericalFailure("column " + std::to_string(c) + " is linearly dependent");
        }
        for (auto &z : col) z /= norm;
        out.set_column(c, col);
        done.push_back(c);
    }
    return out;
}

}  // namespace entangle
