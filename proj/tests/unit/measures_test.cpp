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

#include "entangle/measures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "entangle/error.hpp"
#include "entangle/random.hpp"
#include "oracles.hpp"

namespace entangle {
namespace {

SchmidtDecomposition diagonal_decomposition(const RealVector &lambdas) {
    return {lambdas, ComplexMatrix::identity(lambdas.size()), ComplexMatrix::identity(lambdas.size())};
}

double probability_sum_for(const RealVector &lambdas) {
    return entanglement_probability_sum(probability_table(diagonal_decomposition(lambdas)), lambdas.size());
}

TEST(ProbabilitySum, Examples) {
    EXPECT_NEAR(probability_sum_for({0.5, 0.5}), 1.0, 1e-15);
    EXPECT_EQ(probability_sum_for({1.0, 0.0}), 0.0);
    // N = 2: the normalization is 1, so the value is the raw sum of the four
    // |joint - product| terms.
    const double brute = oracle::correlation_sum(oracle::diagonal_state_joint({0.64, 0.36}));
    EXPECT_NEAR(brute, 0.9216, 1e-15);
    EXPECT_NEAR(probability_sum_for({0.64, 0.36}), brute, 1e-15);
}

TEST(ProbabilitySum, UndefinedBelowTwoLevels) {
    EXPECT_THROW(entanglement_probability_sum(probability_table(diagonal_decomposition({1.0})), 1), UndefinedMeasure);
}

TEST(ClosedForm, Examples) {
    EXPECT_NEAR(entanglement_closed_form(RealVector{1.0 / 3, 1.0 / 3, 1.0 / 3}), 1.0, 1e-15);
    EXPECT_EQ(entanglement_closed_form(RealVector{1.0, 0.0, 0.0}), 0.0);
    EXPECT_NEAR(entanglement_closed_form(RealVector{0.5, 0.3, 0.2}), 0.93, 1e-15);
    EXPECT_NEAR(probability_sum_for({0.5, 0.3, 0.2}), 0.93, 1e-15);
}

TEST(ClosedForm, TwoLevelIsFourLambdaOneMinusLambda) {
    for (double lambda = 0.0; lambda <= 1.0; lambda += 0.05) {
        EXPECT_NEAR(entanglement_closed_form(RealVector{lambda, 1 - lambda}), 4 * lambda * (1 - lambda), 1e-15);
    }
}

TEST(ClosedForm, RejectsInvalidInput) {
    EXPECT_THROW(entanglement_closed_form(RealVector{1.0}), UndefinedMeasure);
    EXPECT_THROW(entanglement_closed_form(RealVector{0.7, 0.7}), InvalidInput);
}

TEST(ClosedForm, MaximumOnlyAtUniformVector) {
    for (std::size_t n = 2; n <= 8; ++n) {
        EXPECT_NEAR(entanglement_closed_form(RealVector(n, 1.0 / static_cast<double>(n))), 1.0, 1e-12);
    }
    Rng rng(22);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 7;
        const RealVector p = random_probability_vector(n, rng);
        double dist2 = 0.0;
        for (double x : p) dist2 += (x - 1.0 / static_cast<double>(n)) * (x - 1.0 / static_cast<double>(n));
        // E = 1 - N/(N-1) * |p - uniform|^2 exactly.
        ASSERT_NEAR(entanglement_closed_form(p), 1.0 - static_cast<double>(n) / (n - 1.0) * dist2, 1e-12);
        ASSERT_LE(entanglement_closed_form(p), 1.0);
    }
}

TEST(ClosedForm, EquivalenceWithProbabilitySumProperty) {
    Rng rng(1919);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t a = 2 + rng.next_u64() % 7;
        const std::size_t b = 2 + rng.next_u64() % 7;
        const PureState psi = random_pure_state(a, b, rng.next_u64());
        const SchmidtDecomposition sd = schmidt_decompose(psi);
        const double sum_form = entanglement_probability_sum(probability_table(psi, sd), sd.size());
        const double closed = entanglement_closed_form(sd.lambdas);
        ASSERT_NEAR(sum_form, closed, 1e-9);
        ASSERT_GE(closed, 0.0);
        ASSERT_LE(closed, 1.0);
    }
}

TEST(ClosedForm, ZeroIffSeparableProperty) {
    Rng rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 6;
        RealVector p = random_probability_vector(n, rng);
        const double e = entanglement_closed_form(p);
        std::sort(p.begin(), p.end(), std::greater<>());
        ASSERT_EQ(e <= 1e-9, p[1] <= 1e-9);
    }
    EXPECT_LE(entanglement_closed_form(RealVector{1.0 - 1e-12, 1e-12}), 1e-9);
}

TEST(Entropy, Examples) {
    EXPECT_EQ(entropy_of_entanglement(RealVector{1.0, 0.0}), 0.0);
    EXPECT_NEAR(entropy_of_entanglement(RealVector{0.5, 0.5}), std::numbers::ln2, 1e-15);
    EXPECT_NEAR(entropy_of_entanglement(RealVector(4, 0.25)), std::log(4.0), 1e-15);
}

TEST(Entropy, BoundedByLogN) {
    Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.next_u64() % 8;
        const RealVector p = random_probability_vector(n, rng);
        ASSERT_LE(entropy_of_entanglement(p), std::log(static_cast<double>(n)) + 1e-12);
    }
}

TEST(TwoEntropy, ExamplesAndProportionality) {
    EXPECT_EQ(two_entropy(RealVector{1.0, 0.0}), 0.0);
    EXPECT_EQ(renyi2_entropy(RealVector{1.0, 0.0}), 0.0);
    EXPECT_NEAR(two_entropy(RealVector{0.5, 0.5}), 0.5, 1e-15);
    EXPECT_NEAR(renyi2_entropy(RealVector{0.5, 0.5}), std::numbers::ln2, 1e-15);
    Rng rng(10);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 7;
        const RealVector p = random_probability_vector(n, rng);
        const double factor = static_cast<double>(n) / (n - 1.0);
        ASSERT_NEAR(entanglement_closed_form(p), factor * two_entropy(p), 1e-12);
    }
}

TEST(Majorizes, Examples) {
    EXPECT_TRUE(majorizes(RealVector{0.5, 0.5}, RealVector{1.0, 0.0}));
    EXPECT_FALSE(majorizes(RealVector{0.6, 0.4}, RealVector{0.5, 0.5}));
    EXPECT_TRUE(majorizes(RealVector{0.4, 0.35, 0.25}, RealVector{0.5, 0.3, 0.2}));
    EXPECT_FALSE(majorizes(RealVector{0.5, 0.3, 0.2}, RealVector{0.4, 0.35, 0.25}));
}

TEST(Majorizes, SortsAndPads) {
    EXPECT_TRUE(majorizes(RealVector{0.2, 0.3, 0.5}, RealVector{0.3, 0.7}));
    EXPECT_FALSE(majorizes(RealVector{0.5, 0.5}, RealVector{0.25, 0.25, 0.25, 0.25}));
    EXPECT_TRUE(majorizes(RealVector{0.3, 0.7}, RealVector{0.7, 0.3}));
}

TEST(Majorizes, ToleratesRoundingAtEquality) {
    EXPECT_TRUE(majorizes(RealVector{0.1 + 0.2, 0.7}, RealVector{0.7, 0.3}));
}

TEST(Majorizes, RejectsUnnormalized) {
    EXPECT_THROW(majorizes(RealVector{0.5, 0.6}, RealVector{1.0, 0.0}), InvalidInput);
    EXPECT_THROW(majorizes(RealVector{1.5, -0.5}, RealVector{1.0, 0.0}), InvalidInput);
}

TEST(PowerSum, ExamplesAndSchurConvexity) {
    EXPECT_EQ(power_sum(RealVector{1.0, 0.0}, 2.0), 1.0);
    EXPECT_NEAR(power_sum(RealVector{0.5, 0.5}, 2.0), 0.5, 1e-15);
    EXPECT_THROW(power_sum(RealVector{0.5, 0.5}, 0.5), InvalidInput);

    Rng rng(55);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 7;
        const RealVector y = random_probability_vector(n, rng);
        const std::size_t i = rng.next_u64() % n;
        const std::size_t j = (i + 1 + rng.next_u64() % (n - 1)) % n;
        const RealVector x = t_transform(y, i, j, rng.uniform());
        ASSERT_TRUE(majorizes(x, y));
        const double q = 1.0 + 4.0 * rng.uniform();
        ASSERT_LE(power_sum(x, q), power_sum(y, q) + 1e-12);
    }
}

TEST(SchurConcavity, ClosedFormReversesMajorizationProperty) {
    Rng rng(66);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 7;
        const RealVector y = random_probability_vector(n, rng);
        const std::size_t i = rng.next_u64() % n;
        const std::size_t j = (i + 1 + rng.next_u64() % (n - 1)) % n;
        const RealVector x = t_transform(y, i, j, rng.uniform());
        ASSERT_TRUE(majorizes(x, y));
        ASSERT_GE(entanglement_closed_form(x), entanglement_closed_form(y) - 1e-12);
    }
}

TEST(TTransform, Validation) {
    EXPECT_THROW(t_transform(RealVector{0.5, 0.5}, 0, 2, 0.5), InvalidInput);
    EXPECT_THROW(t_transform(RealVector{0.5, 0.5}, 0, 1, 1.5), InvalidInput);
    const RealVector y = t_transform(RealVector{0.8, 0.2}, 0, 1, 0.5);
    EXPECT_NEAR(y[0], 0.5, 1e-16);
    EXPECT_NEAR(y[1], 0.5, 1e-16);
}

TEST(Report, BellAndProduct) {
    const EntanglementReport bell = make_report(schmidt_diagonal_state(RealVector{0.5, 0.5}));
    EXPECT_NEAR(bell.e_closed_form, 1.0, 1e-12);
    EXPECT_NEAR(bell.e_probability_sum, 1.0, 1e-12);
    EXPECT_NEAR(bell.entropy_of_entanglement, std::numbers::ln2, 1e-12);
    EXPECT_EQ(bell.schmidt_rank, 2u);

    const EntanglementReport product = make_report(product_state(LocalVector::basis(3, 2), LocalVector::basis(2, 0)));
    EXPECT_LE(product.e_closed_form, 1e-9);
    EXPECT_LE(product.e_probability_sum, 1e-9);
    EXPECT_LE(product.entropy_of_entanglement, 1e-9);
    EXPECT_LE(product.two_entropy, 1e-9);
    EXPECT_LE(product.renyi2, 1e-9);
    EXPECT_EQ(product.schmidt_rank, 1u);
}

TEST(Report, InvariantsProperty) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const PureState psi = random_pure_state(2 + seed % 5, 2 + (seed / 5) % 5, seed);
        const EntanglementReport r = make_report(psi);
        ASSERT_NEAR(r.e_probability_sum, r.e_closed_form, 1e-9);
        ASSERT_EQ(r.e_closed_form <= 1e-9, r.schmidt_rank == 1);
        ASSERT_LE(r.entropy_of_entanglement, std::log(static_cast<double>(r.lambdas.size())) + 1e-12);
    }
}

TEST(Report, OneLevelSystemIsUndefined) { EXPECT_THROW(make_report(random_pure_state(1, 3, 0)), UndefinedMeasure); }

}  // namespace
}  // namespace entangle
