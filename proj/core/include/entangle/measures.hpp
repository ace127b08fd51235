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

#include <cstddef>
#include <span>

#include "entangle/linalg.hpp"
#include "entangle/schmidt.hpp"
#include "entangle/states.hpp"

namespace entangle {

/// Slack on descending partial sums when testing majorization.
inline constexpr double kMajorizationSlack = 1e-12;

/// Everything we report about one bipartite state. Entropies are in nats.
struct EntanglementReport {
    double e_probability_sum = 0.0;
    double e_closed_form = 0.0;
    double entropy_of_entanglement = 0.0;
    double two_entropy = 0.0;
    double renyi2 = 0.0;
    std::size_t schmidt_rank = 0;
    RealVector lambdas;
};

/// N / (2(N - 1)) * sum_{n,m} |P(n_A, m_B) - P(n_A) P(m_B)| with N the
/// number of Schmidt levels. Throws UndefinedMeasure for N < 2.
double entanglement_probability_sum(const ProbabilityTable &table, std::size_t n_schmidt);

/// N / (N - 1) * (1 - sum_i lambda_i^2). Throws UndefinedMeasure for N < 2.
double entanglement_closed_form(std::span<const double> lambdas);

/// Closed-form measure of psi over N = min(dim_a, dim_b) Schmidt levels.
double entanglement(const PureState &psi);

/// -sum lambda_i ln lambda_i, with 0 ln 0 = 0.
double entropy_of_entanglement(std::span<const double> lambdas);

/// Linear 2-entropy 1 - sum lambda_i^2.
double two_entropy(std::span<const double> lambdas);

/// Renyi-2 entropy -ln sum lambda_i^2.
double renyi2_entropy(std::span<const double> lambdas);

/// sum x_i^q for q >= 1 (Schur convex).
double power_sum(std::span<const double> x, double q);

/// True iff x is majorized by y (x < y): each descending partial sum of x is
/// at most that of y plus kMajorizationSlack. The shorter vector is padded
/// with zeros. Both must be probability vectors.
bool majorizes(std::span<const double> x, std::span<const double> y);

/// t x + (1 - t) P_ij x where P_ij swaps entries i and j. The result is
/// majorized by x for any t in [0, 1].
RealVector t_transform(std::span<const double> x, std::size_t i, std::size_t j, double t);

/// All measures for psi. The probability-sum value is computed from the
/// Schmidt-basis statistics measured on psi itself.
EntanglementReport make_report(const PureState &psi);

}  // namespace entangle
