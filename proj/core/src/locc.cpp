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

#include "entangle/locc.hpp"

#include <cmath>
#include <string>

#include "entangle/error.hpp"
#include "entangle/measures.hpp"
#include "entangle/random.hpp"
#include "entangle/schmidt.hpp"

namespace entangle {

LocalMeasurementSet::LocalMeasurementSet(std::vector<ComplexMatrix> operators) : operators_(std::move(operators)) {
    if (operators_.empty()) throw InvalidInput("measurement set needs at least one operator");
    const std::size_t d = operators_.front().rows();
    for (const auto &op : operators_) {
        if (op.rows() != d || op.cols() != d || d == 0) {
            throw InvalidInput("measurement operators must all be dim x dim");
        }
        if (!op.all_finite()) throw InvalidInput("measurement operator has non-finite entries");
    }
    if (completeness_error() > 1e-9) {
        throw InvalidInput("measurement operators violate completeness (error " +
                           std::to_string(completeness_error()) + ")");
    }
}

double LocalMeasurementSet::completeness_error() const {
    ComplexMatrix sum(dim(), dim());
    for (const auto &op : operators_) sum += op.adjoint() * op;
    return frobenius_norm(sum - ComplexMatrix::identity(dim()));
}

LocalMeasurementSet LocalMeasurementSet::trivial(std::size_t dim) {
    return LocalMeasurementSet({ComplexMatrix::identity(dim)});
}

LocalMeasurementSet LocalMeasurementSet::projective(const ComplexMatrix &basis) {
    if (!is_unitary(basis)) throw InvalidInput("projective measurement needs an orthonormal basis");
    std::vector<ComplexMatrix> ops;
    for (std::size_t k = 0; k < basis.cols(); ++k) {
        ComplexMatrix v(basis.rows(), 1, basis.column(k));
        ops.push_back(v * v.adjoint());
    }
    return LocalMeasurementSet(std::move(ops));
}

LocalMeasurementSet random_measurement_set(std::size_t dim, std::size_t k_outcomes, std::uint64_t seed) {
    if (dim == 0 || k_outcomes == 0) throw InvalidInput("measurement set needs dim >= 1 and k_outcomes >= 1");
    Rng rng(seed);
    const ComplexMatrix iso = haar_isometry(dim * k_outcomes, dim, rng);
    std::vector<ComplexMatrix> ops;
    ops.reserve(k_outcomes);
    for (std::size_t k = 0; k < k_outcomes; ++k) {
        ComplexMatrix block(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) block(i, j) = iso(k * dim + i, j);
        ops.push_back(std::move(block));
    }
    return LocalMeasurementSet(std::move(ops));
}

std::vector<MeasurementOutcome> apply_lgm(const PureState &psi, const LocalMeasurementSet &set_a,
                                          const LocalMeasurementSet &set_b) {
    if (set_a.dim() != psi.dim_a() || set_b.dim() != psi.dim_b()) {
        throw InvalidInput("measurement dimensions do not match the state");
    }
    std::vector<MeasurementOutcome> outcomes;
    outcomes.reserve(set_a.outcomes() * set_b.outcomes());
    for (std::size_t i = 0; i < set_a.outcomes(); ++i) {
        const ComplexMatrix left = set_a[i] * psi.amplitudes();
        for (std::size_t j = 0; j < set_b.outcomes(); ++j) {
            ComplexMatrix post = left * set_b[j].transpose();
            const double norm = frobenius_norm(post);
            MeasurementOutcome out{outcomes.size(), i, j, norm * norm, std::nullopt};
            if (out.probability > kZeroProbability) {
                post *= 1.0 / norm;
                out.post_state.emplace(std::move(post));
            }
            outcomes.push_back(std::move(out));
        }
    }
    return outcomes;
}

MonotonicityTrial monotonicity_trial(const PureState &psi, const LocalMeasurementSet &set_a,
                                     const LocalMeasurementSet &set_b) {
    MonotonicityTrial trial;
    trial.e_before = entanglement(psi);
    trial.outcomes = apply_lgm(psi, set_a, set_b);
    for (const auto &o : trial.outcomes)
        if (o.post_state) trial.e_average_after += o.probability * entanglement(*o.post_state);
    trial.margin = trial.e_before - trial.e_average_after;
    return trial;
}

bool locc_transformable(const PureState &psi, const PureState &phi) {
    return majorizes(schmidt_decompose(psi).lambdas, schmidt_decompose(phi).lambdas);
}

}  // namespace entangle
