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

#include "entangle/schmidt.hpp"

#include <algorithm>
#include <cmath>

#include "entangle/error.hpp"

namespace entangle {

std::size_t SchmidtDecomposition::rank() const noexcept {
    return static_cast<std::size_t>(std::count_if(lambdas.begin(), lambdas.end(), [](double x) { return x > 0.0; }));
}

ComplexMatrix SchmidtDecomposition::reconstruct() const {
    ComplexMatrix c(basis_a.rows(), basis_b.rows());
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        const double w = std::sqrt(lambdas[k]);
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) += w * basis_a(i, k) * basis_b(j, k);
    }
    return c;
}

SchmidtDecomposition schmidt_decompose(const PureState &psi) {
    SvdResult f = svd(psi.amplitudes());
    // C = U S V^dagger, so the B-side vectors are the columns of conj(V).
    SchmidtDecomposition sd{RealVector(f.sigma.size()), std::move(f.u), f.v.conjugate()};
    double total = 0.0;
    for (std::size_t i = 0; i < f.sigma.size(); ++i) {
        const double lambda = f.sigma[i] * f.sigma[i];
        sd.lambdas[i] = lambda < kLambdaFloor ? 0.0 : lambda;
        total += sd.lambdas[i];
    }
    for (auto &x : sd.lambdas) x /= total;
    return sd;
}

ProbabilityTable table_from_joint(RealMatrix joint) {
    const std::size_t rows = joint.rows();
    const std::size_t cols = joint.cols();
    ProbabilityTable t{RealVector(rows, 0.0), RealVector(cols, 0.0), std::move(joint), {}};
    for (std::size_t n = 0; n < rows; ++n)
        for (std::size_t m = 0; m < cols; ++m) {
            t.marginal_a[n] += t.joint(n, m);
            t.marginal_b[m] += t.joint(n, m);
        }
    t.conditional.resize(rows * cols);
    for (std::size_t n = 0; n < rows; ++n)
        for (std::size_t m = 0; m < cols; ++m)
            if (t.marginal_b[m] > 0.0) t.conditional[n * cols + m] = t.joint(n, m) / t.marginal_b[m];
    return t;
}

ProbabilityTable probability_table(const SchmidtDecomposition &sd) {
    const std::size_t n = sd.size();
    ProbabilityTable t{sd.lambdas, sd.lambdas, RealMatrix(n, n), std::vector<std::optional<double>>(n * n)};
    for (std::size_t i = 0; i < n; ++i) t.joint(i, i) = sd.lambdas[i];
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (sd.lambdas[b] > 0.0) t.conditional[a * n + b] = a == b ? 1.0 : 0.0;
    return t;
}

ProbabilityTable probability_table(const PureState &psi, const SchmidtDecomposition &sd) {
    if (sd.basis_a.rows() != psi.dim_a() || sd.basis_b.rows() != psi.dim_b()) {
        throw InvalidInput("decomposition does not belong to this state");
    }
    // <n_A m_B|psi> = (basis_a^dagger C conj(basis_b))[n][m]
    const ComplexMatrix overlaps = sd.basis_a.adjoint() * psi.amplitudes() * sd.basis_b.conjugate();
    RealMatrix joint(overlaps.rows(), overlaps.cols());
    for (std::size_t n = 0; n < joint.rows(); ++n)
        for (std::size_t m = 0; m < joint.cols(); ++m) joint(n, m) = std::norm(overlaps(n, m));
    return table_from_joint(std::move(joint));
}

CorrelationMatrix correlation_matrix(const ProbabilityTable &table) {
    CorrelationMatrix c{RealMatrix(table.marginal_a.size(), table.marginal_b.size())};
    for (std::size_t n = 0; n < table.marginal_a.size(); ++n)
        for (std::size_t m = 0; m < table.marginal_b.size(); ++m)
            c.entries(n, m) = std::abs(table.joint(n, m) - table.marginal_a[n] * table.marginal_b[m]);
    return c;
}

PureState separable_reference_state(std::span<const double> lambdas) {
    if (lambdas.empty()) throw InvalidInput("Schmidt vector is empty");
    validate_probability_vector(lambdas, "Schmidt vector");
    ComplexVector phi(lambdas.size());
    std::transform(lambdas.begin(), lambdas.end(), phi.begin(), [](double x) { return Complex(std::sqrt(x)); });
    const LocalVector local(phi);
    return product_state(local, local);
}

}  // namespace entangle
