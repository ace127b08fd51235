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

#include <cstdint>
#include <optional>
#include <vector>

#include "entangle/linalg.hpp"
#include "entangle/states.hpp"

namespace entangle {

/// Outcomes with probability at or below this carry no post-measurement state.
inline constexpr double kZeroProbability = 1e-14;

/// Operators {A_k} of a local general measurement, sum_k A_k^dagger A_k = I.
class LocalMeasurementSet {
   public:
    /// Throws InvalidInput if the set is empty, shapes disagree, or
    /// completeness fails by more than 1e-9 in Frobenius norm.
    explicit LocalMeasurementSet(std::vector<ComplexMatrix> operators);

    std::size_t dim() const noexcept { return operators_.front().rows(); }
    std::size_t outcomes() const noexcept { return operators_.size(); }
    const std::vector<ComplexMatrix> &operators() const noexcept { return operators_; }
    const ComplexMatrix &operator[](std::size_t k) const { return operators_[k]; }

    /// ||sum_k A_k^dagger A_k - I||_F
    double completeness_error() const;

    /// The do-nothing instrument {I}.
    static LocalMeasurementSet trivial(std::size_t dim);
    /// Rank-one projectors onto the columns of an orthonormal basis.
    static LocalMeasurementSet projective(const ComplexMatrix &basis);

   private:
    std::vector<ComplexMatrix> operators_;
};

struct MeasurementOutcome {
    std::size_t index = 0;
    std::size_t index_a = 0;
    std::size_t index_b = 0;
    double probability = 0.0;
    std::optional<PureState> post_state;  // absent when probability <= kZeroProbability
};

struct MonotonicityTrial {
    double e_before = 0.0;
    std::vector<MeasurementOutcome> outcomes;
    double e_average_after = 0.0;
    double margin = 0.0;  // e_before - e_average_after, >= 0 up to rounding
};

/// Slices the first `dim` columns of a Haar unitary on dim*k_outcomes levels
/// into k_outcomes stacked dim x dim blocks.
LocalMeasurementSet random_measurement_set(std::size_t dim, std::size_t k_outcomes, std::uint64_t seed);

/// Measures psi with {A_i} on A and {B_j} on B. Outcome k = i * K_B + j
/// applies A_i (x) B_j, occurs with p_k = ||(A_i (x) B_j) psi||^2 and leaves
/// the renormalized post-state. Outcome probabilities sum to 1 for any pair
/// of complete sets; a trivial set {I} gives a one-sided measurement.
std::vector<MeasurementOutcome> apply_lgm(const PureState &psi, const LocalMeasurementSet &set_a,
                                          const LocalMeasurementSet &set_b);

MonotonicityTrial monotonicity_trial(const PureState &psi, const LocalMeasurementSet &set_a,
                                     const LocalMeasurementSet &set_b);

/// Deterministic LOCC convertibility of psi into phi: lambda(psi) is
/// majorized by lambda(phi).
bool locc_transformable(const PureState &psi, const PureState &phi);

}  // namespace entangle
