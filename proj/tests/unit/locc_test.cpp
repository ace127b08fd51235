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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "entangle/error.hpp"
#include "entangle/measures.hpp"
#include "entangle/random.hpp"
#include "entangle/schmidt.hpp"

namespace entangle {
namespace {

double total_probability(const std::vector<MeasurementOutcome> &outcomes) {
    double s = 0.0;
    for (const auto &o : outcomes) s += o.probability;
    return s;
}

PureState bell() { return schmidt_diagonal_state(RealVector{0.5, 0.5}); }

TEST(LocalMeasurementSet, Validation) {
    EXPECT_THROW(LocalMeasurementSet({}), InvalidInput);
    EXPECT_THROW(LocalMeasurementSet({ComplexMatrix::identity(2), ComplexMatrix::identity(2)}), InvalidInput);
    EXPECT_THROW(LocalMeasurementSet({ComplexMatrix::identity(2), ComplexMatrix(3, 3)}), InvalidInput);
    EXPECT_NO_THROW(LocalMeasurementSet::projective(ComplexMatrix::identity(3)));
    EXPECT_EQ(LocalMeasurementSet::trivial(4).outcomes(), 1u);
}

TEST(RandomMeasurementSet, SingleOutcomeIsUnitary) {
    const LocalMeasurementSet set = random_measurement_set(3, 1, 17);
    ASSERT_EQ(set.outcomes(), 1u);
    EXPECT_TRUE(is_unitary(set[0], 1e-10));
}

TEST(RandomMeasurementSet, CompletenessAndDeterminism) {
    for (std::size_t dim = 1; dim <= 5; ++dim)
        for (std::size_t k = 1; k <= 5; ++k)
            for (std::uint64_t seed : {0ull, 3ull, 1234ull}) {
                const LocalMeasurementSet set = random_measurement_set(dim, k, seed);
                ASSERT_EQ(set.outcomes(), k);
                ASSERT_LE(set.completeness_error(), 1e-10);
                ASSERT_EQ(set.operators(), random_measurement_set(dim, k, seed).operators());
            }
    EXPECT_THROW(random_measurement_set(0, 2, 1), InvalidInput);
    EXPECT_THROW(random_measurement_set(2, 0, 1), InvalidInput);
}

TEST(ApplyLgm, TrivialSetsLeaveStateUnchanged) {
    const PureState psi = random_pure_state(2, 3, 5);
    const auto outcomes = apply_lgm(psi, LocalMeasurementSet::trivial(2), LocalMeasurementSet::trivial(3));
    ASSERT_EQ(outcomes.size(), 1u);
    EXPECT_NEAR(outcomes[0].probability, 1.0, 1e-15);
    ASSERT_TRUE(outcomes[0].post_state.has_value());
    EXPECT_LT(frobenius_norm(outcomes[0].post_state->amplitudes() - psi.amplitudes()), 1e-15);
}

TEST(ApplyLgm, ProjectiveOnBellGivesProductStates) {
    const auto outcomes =
        apply_lgm(bell(), LocalMeasurementSet::projective(ComplexMatrix::identity(2)), LocalMeasurementSet::trivial(2));
    ASSERT_EQ(outcomes.size(), 2u);
    for (const auto &o : outcomes) {
        EXPECT_NEAR(o.probability, 0.5, 1e-15);
        ASSERT_TRUE(o.post_state.has_value());
        EXPECT_EQ(entanglement(*o.post_state), 0.0);
    }
}

TEST(ApplyLgm, ProjectiveOnUnevenStateFollowsMarginals) {
    const auto outcomes = apply_lgm(schmidt_diagonal_state(RealVector{0.7, 0.3}),
                                    LocalMeasurementSet::projective(ComplexMatrix::identity(2)),
                                    LocalMeasurementSet::trivial(2));
    ASSERT_EQ(outcomes.size(), 2u);
    EXPECT_NEAR(outcomes[0].probability, 0.7, 1e-15);
    EXPECT_NEAR(outcomes[1].probability, 0.3, 1e-15);
}

TEST(ApplyLgm, ZeroProbabilityOutcomeHasNoPostState) {
    const PureState psi = product_state(LocalVector::basis(2, 0), LocalVector::basis(2, 1));
    const auto outcomes =
        apply_lgm(psi, LocalMeasurementSet::projective(ComplexMatrix::identity(2)), LocalMeasurementSet::trivial(2));
    EXPECT_EQ(outcomes[1].probability, 0.0);
    EXPECT_FALSE(outcomes[1].post_state.has_value());
    EXPECT_TRUE(outcomes[0].post_state.has_value());
}

TEST(ApplyLgm, TwoSidedOutcomesIndexPairs) {
    const PureState psi = random_pure_state(2, 3, 44);
    const auto outcomes = apply_lgm(psi, random_measurement_set(2, 3, 1), random_measurement_set(3, 2, 2));
    ASSERT_EQ(outcomes.size(), 6u);
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        EXPECT_EQ(outcomes[k].index, k);
        EXPECT_EQ(outcomes[k].index_a, k / 2);
        EXPECT_EQ(outcomes[k].index_b, k % 2);
    }
    EXPECT_NEAR(total_probability(outcomes), 1.0, 1e-12);
}

TEST(ApplyLgm, DimensionMismatch) {
    EXPECT_THROW(apply_lgm(bell(), LocalMeasurementSet::trivial(3), LocalMeasurementSet::trivial(2)), InvalidInput);
}

TEST(ApplyLgm, ProbabilityConservationProperty) {
    Rng rng(808);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t a = 1 + rng.next_u64() % 4;
        const std::size_t b = 1 + rng.next_u64() % 4;
        const PureState psi = random_pure_state(a, b, rng.next_u64());
        const auto outcomes = apply_lgm(psi, random_measurement_set(a, 1 + rng.next_u64() % 4, rng.next_u64()),
                                        random_measurement_set(b, 1 + rng.next_u64() % 4, rng.next_u64()));
        ASSERT_NEAR(total_probability(outcomes), 1.0, 1e-9);
        for (const auto &o : outcomes)
            if (o.post_state) ASSERT_NEAR(frobenius_norm(o.post_state->amplitudes()), 1.0, 1e-12);
    }
}

TEST(MonotonicityTrial, ProjectiveOnBell) {
    const MonotonicityTrial t = monotonicity_trial(bell(), LocalMeasurementSet::projective(ComplexMatrix::identity(2)),
                                                   LocalMeasurementSet::trivial(2));
    EXPECT_NEAR(t.e_before, 1.0, 1e-12);
    EXPECT_NEAR(t.e_average_after, 0.0, 1e-12);
    EXPECT_NEAR(t.margin, 1.0, 1e-12);
}

TEST(MonotonicityTrial, TrivialMeasurementHasZeroMargin) {
    const PureState psi = random_pure_state(3, 3, 3);
    const MonotonicityTrial t = monotonicity_trial(psi, LocalMeasurementSet::trivial(3), LocalMeasurementSet::trivial(3));
    EXPECT_NEAR(t.margin, 0.0, 1e-12);
}

TEST(MonotonicityTrial, NeverIncreasesOnAverageProperty) {
    Rng rng(6);
    std::vector<double> one_sided;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t a = 2 + rng.next_u64() % 3;
        const std::size_t b = 2 + rng.next_u64() % 3;
        const PureState psi = random_pure_state(a, b, rng.next_u64());
        const bool two_sided = trial % 2 == 1;
        const LocalMeasurementSet sa = random_measurement_set(a, 1 + rng.next_u64() % 4, rng.next_u64());
        const LocalMeasurementSet sb =
            two_sided ? random_measurement_set(b, 1 + rng.next_u64() % 4, rng.next_u64()) : LocalMeasurementSet::trivial(b);
        const MonotonicityTrial t = monotonicity_trial(psi, sa, sb);
        ASSERT_GE(t.margin, -1e-9) << "trial " << trial;
        if (!two_sided) one_sided.push_back(t.margin);
    }
    std::nth_element(one_sided.begin(), one_sided.begin() + one_sided.size() / 2, one_sided.end());
    EXPECT_GT(one_sided[one_sided.size() / 2], 0.0);
}

TEST(LoccTransformable, Examples) {
    const PureState uniform = bell();
    const PureState product = product_state(LocalVector::basis(2, 0), LocalVector::basis(2, 0));
    EXPECT_TRUE(locc_transformable(uniform, random_pure_state(2, 2, 1)));
    EXPECT_TRUE(locc_transformable(uniform, product));
    EXPECT_FALSE(locc_transformable(product, uniform));

    const PureState p64 = schmidt_diagonal_state(RealVector{0.6, 0.4});
    const PureState p82 = schmidt_diagonal_state(RealVector{0.8, 0.2});
    EXPECT_TRUE(locc_transformable(p64, p82));
    EXPECT_FALSE(locc_transformable(p82, p64));
}

TEST(LoccTransformable, DifferentShapesPadWithZeros) {
    EXPECT_TRUE(locc_transformable(schmidt_diagonal_state(RealVector{0.4, 0.3, 0.3}),
                                   schmidt_diagonal_state(RealVector{0.5, 0.5})));
    EXPECT_FALSE(locc_transformable(schmidt_diagonal_state(RealVector{0.5, 0.5}),
                                    schmidt_diagonal_state(RealVector{0.4, 0.3, 0.3})));
}

TEST(LoccTransformable, ConsistentWithMeasureProperty) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const PureState psi = random_pure_state(3, 3, 2 * seed);
        const PureState phi = random_pure_state(3, 3, 2 * seed + 1);
        if (locc_transformable(psi, phi)) ASSERT_GE(entanglement(psi), entanglement(phi) - 1e-9);
        if (locc_transformable(phi, psi)) ASSERT_GE(entanglement(phi), entanglement(psi) - 1e-9);
    }
}

}  // namespace
}  // namespace entangle
