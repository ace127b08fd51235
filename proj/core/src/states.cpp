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

#include "entangle/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entangle/error.hpp"
#include "entangle/random.hpp"

namespace entangle {

namespace {

double normalization_factor(std::span<const Complex> v, double tolerance, const char *what) {
    const double norm = vector_norm(v);
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > tolerance) {
        throw InvalidInput(std::string(what) + " is not normalized (norm " + std::to_string(norm) + ")");
    }
    return norm;
}

}  // namespace

void validate_probability_vector(std::span<const double> p, const char *what) {
    double total = 0.0;
    for (double x : p) {
        if (!std::isfinite(x) || x < 0.0) throw InvalidInput(std::string(what) + " has a negative entry");
        total += x;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw InvalidInput(std::string(what) + " does not sum to 1 (sum " + std::to_string(total) + ")");
    }
}

LocalVector::LocalVector(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw InvalidInput("local vector must have dimension >= 1");
    const double norm = normalization_factor(amplitudes_, kNormTolerance, "local vector");
    if (std::abs(norm - 1.0) > kNormRounding)
        for (auto &z : amplitudes_) z /= norm;
}

LocalVector LocalVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw InvalidInput("basis index out of range");
    ComplexVector v(dim, 0.0);
    v[index] = 1.0;
    return LocalVector(std::move(v));
}

PureState::PureState(ComplexMatrix amplitudes, double tolerance) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw InvalidInput("state dimensions must be >= 1");
    if (!amplitudes_.all_finite()) throw InvalidInput("state has non-finite amplitudes");
    const double norm = normalization_factor(amplitudes_.data(), tolerance, "state");
    if (std::abs(norm - 1.0) > kNormRounding) amplitudes_ *= 1.0 / norm;
}

std::size_t StateTensor::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

PureState product_state(const LocalVector &phi_a, const LocalVector &phi_b) {
    ComplexMatrix c(phi_a.dim(), phi_b.dim());
    for (std::size_t i = 0; i < phi_a.dim(); ++i)
        for (std::size_t j = 0; j < phi_b.dim(); ++j) c(i, j) = phi_a[i] * phi_b[j];
    return PureState(std::move(c));
}

PureState schmidt_diagonal_state(std::span<const double> lambdas) {
    if (lambdas.empty()) throw InvalidInput("Schmidt vector is empty");
    validate_probability_vector(lambdas, "Schmidt vector");
    ComplexMatrix c(lambdas.size(), lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) c(i, i) = std::sqrt(lambdas[i]);
    return PureState(std::move(c));
}

PureState random_pure_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
    if (dim_a == 0 || dim_b == 0) throw InvalidInput("state dimensions must be >= 1");
    Rng rng(seed);
    ComplexMatrix c = ginibre(dim_a, dim_b, rng);
    c *= 1.0 / frobenius_norm(c);
    return PureState(std::move(c));
}

PureState apply_local_unitaries(const PureState &psi, const ComplexMatrix &u_a, const ComplexMatrix &u_b) {
    if (u_a.rows() != psi.dim_a() || u_b.rows() != psi.dim_b()) {
        throw InvalidInput("local unitary dimensions do not match the state");
    }
    if (!is_unitary(u_a)) throw InvalidInput("u_a is not unitary");
    if (!is_unitary(u_b)) throw InvalidInput("u_b is not unitary");
    return PureState(u_a * psi.amplitudes() * u_b.transpose());
}

ComplexMatrix reduced_density_matrix(const PureState &psi, Subsystem subsystem) {
    const ComplexMatrix &c = psi.amplitudes();
    ComplexMatrix rho = subsystem == Subsystem::kA ? c * c.adjoint() : c.transpose() * c.conjugate();
    // Exact Hermiticity; the products above agree with their adjoint only up
    // to rounding.
    for (std::size_t i = 0; i < rho.rows(); ++i) {
        rho(i, i) = rho(i, i).real();
        for (std::size_t j = i + 1; j < rho.cols(); ++j) rho(j, i) = std::conj(rho(i, j));
    }
    return rho;
}

PureState bipartition(const StateTensor &tensor, std::span<const std::size_t> part_a) {
    const std::size_t factors = tensor.dims.size();
    if (factors < 2) throw InvalidPartition("need at least two factors to bipartition");
    if (std::any_of(tensor.dims.begin(), tensor.dims.end(), [](std::size_t d) { return d == 0; })) {
        throw InvalidInput("factor dimensions must be >= 1");
    }
    if (tensor.amplitudes.size() != tensor.total_dim()) {
        throw InvalidInput("amplitude count does not match the product of dims");
    }

    std::vector<bool> in_a(factors, false);
    for (std::size_t f : part_a) {
        if (f >= factors) throw InvalidPartition("factor index " + std::to_string(f) + " out of range");
        if (in_a[f]) throw InvalidPartition("factor index " + std::to_string(f) + " repeated");
        in_a[f] = true;
    }
    if (part_a.empty() || part_a.size() == factors) {
        throw InvalidPartition("part A must be a nonempty proper subset of the factors");
    }

    std::vector<std::size_t> a_factors;
    std::vector<std::size_t> b_factors;
    for (std::size_t f = 0; f < factors; ++f) (in_a[f] ? a_factors : b_factors).push_back(f);
    std::size_t dim_a = 1;
    std::size_t dim_b = 1;
    for (std::size_t f : a_factors) dim_a *= tensor.dims[f];
    for (std::size_t f : b_factors) dim_b *= tensor.dims[f];

    // Walk the flat tensor with a mixed-radix counter and route each digit
    // to the row or column index.
    ComplexMatrix c(dim_a, dim_b);
    std::vector<std::size_t> digits(factors, 0);
    for (std::size_t flat = 0; flat < tensor.amplitudes.size(); ++flat) {
        std::size_t row = 0;
        std::size_t col = 0;
        for (std::size_t f : a_factors) row = row * tensor.dims[f] + digits[f];
        for (std::size_t f : b_factors) col = col * tensor.dims[f] + digits[f];
        c(row, col) = tensor.amplitudes[flat];
        for (std::size_t f = factors; f-- > 0;) {
            if (++digits[f] < tensor.dims[f]) break;
            digits[f] = 0;
        }
    }
    return PureState(std::move(c));
}

}  // namespace entangle
