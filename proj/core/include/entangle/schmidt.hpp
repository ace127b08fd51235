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

#include <optional>
#include <span>

#include "entangle/linalg.hpp"
#include "entangle/states.hpp"

namespace entangle {

/// Schmidt parameters below this are set to exactly zero.
inline constexpr double kLambdaFloor = 1e-12;

/// psi = sum_i sqrt(lambdas[i]) basis_a[:, i] (x) basis_b[:, i].
///
/// `lambdas` has min(dim_a, dim_b) entries, sorted descending, summing to 1.
/// For degenerate lambdas the bases are whatever the SVD produced; only the
/// lambdas are unique.
struct SchmidtDecomposition {
    RealVector lambdas;
    ComplexMatrix basis_a;  // dim_a x N
    ComplexMatrix basis_b;  // dim_b x N

    std::size_t size() const noexcept { return lambdas.size(); }
    /// Number of nonzero Schmidt parameters.
    std::size_t rank() const noexcept;
    /// sum_i sqrt(lambda_i) |i_A i_B> as an amplitude matrix.
    ComplexMatrix reconstruct() const;
};

/// Schmidt-basis measurement statistics of a bipartite pure state.
///
/// Entries of `conditional` are P(n_A | m_B) and only exist where
/// marginal_b[m] > 0.
struct ProbabilityTable {
    RealVector marginal_a;
    RealVector marginal_b;
    RealMatrix joint;
    std::vector<std::optional<double>> conditional;

    std::size_t size() const noexcept { return marginal_a.size(); }
    std::optional<double> conditional_at(std::size_t n, std::size_t m) const {
        return conditional[n * marginal_b.size() + m];
    }
};

/// |P(n_A, m_B) - P(n_A) P(m_B)|, the correlations a product state lacks.
struct CorrelationMatrix {
    RealMatrix entries;

    double sum() const noexcept { return entries.sum(); }
};

SchmidtDecomposition schmidt_decompose(const PureState &psi);

/// Table implied by the decomposition: both marginals are the lambdas and
/// the joint distribution is diagonal.
ProbabilityTable probability_table(const SchmidtDecomposition &sd);

/// Same table obtained by projecting psi onto every |n_A> (x) |m_B> of the
/// Schmidt bases, so that nothing is assumed about the result's structure.
ProbabilityTable probability_table(const PureState &psi, const SchmidtDecomposition &sd);

/// Builds marginals and conditionals from a joint distribution.
ProbabilityTable table_from_joint(RealMatrix joint);

CorrelationMatrix correlation_matrix(const ProbabilityTable &table);

/// (sum_i sqrt(lambda_i)|i_A>) (x) (sum_j sqrt(lambda_j)|j_B>): a product
/// state with the same single-party statistics as the Schmidt state.
PureState separable_reference_state(std::span<const double> lambdas);

}  // namespace entangle
