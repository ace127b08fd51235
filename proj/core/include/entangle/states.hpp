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
#include <limits>
#include <span>
#include <vector>

#include "entangle/linalg.hpp"

namespace entangle {

/// Inputs whose norm is within this distance of 1 are accepted and
/// renormalized exactly.
inline constexpr double kNormTolerance = 1e-9;
/// Norms this close to 1 count as already normalized and are left untouched,
/// so re-wrapping normalized amplitudes never changes their bits.
inline constexpr double kNormRounding = 4.0 * std::numeric_limits<double>::epsilon();

enum class Subsystem { kA, kB };

/// Unit vector of one subsystem.
class LocalVector {
   public:
    explicit LocalVector(ComplexVector amplitudes);

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }

    /// |index> in a dim-level system.
    static LocalVector basis(std::size_t dim, std::size_t index);

   private:
    ComplexVector amplitudes_;
};

/// Normalized bipartite pure state. Row i, column j of the amplitude matrix
/// is the coefficient of |i_A> (x) |j_B>. Either dimension may be larger.
class PureState {
   public:
    /// Throws InvalidInput unless the Frobenius norm is 1 within `tolerance`;
    /// otherwise the stored amplitudes are rescaled to norm 1 (unless already
    /// within kNormRounding of it).
    explicit PureState(ComplexMatrix amplitudes, double tolerance = kNormTolerance);

    std::size_t dim_a() const noexcept { return amplitudes_.rows(); }
    std::size_t dim_b() const noexcept { return amplitudes_.cols(); }
    std::size_t min_dim() const noexcept { return std::min(dim_a(), dim_b()); }
    const ComplexMatrix &amplitudes() const noexcept { return amplitudes_; }

    /// Amplitudes flattened in row-major order (A index slowest).
    std::span<const Complex> vector() const noexcept { return amplitudes_.data(); }

    friend bool operator==(const PureState &, const PureState &) = default;

   private:
    ComplexMatrix amplitudes_;
};

/// Amplitudes of a state on several factors, row-major with factor 0
/// slowest.
struct StateTensor {
    std::vector<std::size_t> dims;
    ComplexVector amplitudes;

    std::size_t total_dim() const;
};

/// phi_a (x) phi_b.
PureState product_state(const LocalVector &phi_a, const LocalVector &phi_b);

/// sum_i sqrt(lambda_i) |i_A i_B>. Requires a probability vector.
PureState schmidt_diagonal_state(std::span<const double> lambdas);

/// Haar-random state from i.i.d. complex normal amplitudes.
PureState random_pure_state(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);

/// (u_a (x) u_b)|psi>, i.e. u_a * C * u_b^T on the amplitude matrix.
PureState apply_local_unitaries(const PureState &psi, const ComplexMatrix &u_a, const ComplexMatrix &u_b);

/// rho_A = C C^dagger or rho_B = C^T conj(C).
ComplexMatrix reduced_density_matrix(const PureState &psi, Subsystem subsystem);

/// Regroups a multi-factor state into the cut (part_a | rest). Factor
/// indices are 0-based; part_a must be a nonempty proper subset.
PureState bipartition(const StateTensor &tensor, std::span<const std::size_t> part_a);

/// Throws InvalidInput unless p is nonnegative and sums to 1 within 1e-9.
void validate_probability_vector(std::span<const double> p, const char *what);

}  // namespace entangle
