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

// Seeded randomized verification campaigns. Trial i always draws from
// Rng(base_seed + i), so results do not depend on how trials are spread
// across worker threads.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entangle {

enum class Suite { kEquivalence, kInvariance, kMonotonicity, kMajorization };

inline constexpr Suite kAllSuites[] = {Suite::kEquivalence, Suite::kInvariance, Suite::kMonotonicity,
                                       Suite::kMajorization};

std::string_view suite_name(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

/// Pass threshold used when none is given: 1e-12 for majorization, 1e-9
/// otherwise.
double default_tolerance(Suite suite);

struct CampaignConfig {
    std::size_t trials = 1000;
    std::size_t max_dim = 4;    // dimensions are drawn from [2, max_dim]
    std::uint64_t seed = 0;
    std::optional<double> tolerance;
    std::size_t jobs = 1;
};

struct TrialFailure {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    double value = 0.0;
};

struct SuiteResult {
    Suite suite = Suite::kEquivalence;
    double tolerance = 0.0;
    std::size_t trials = 0;
    std::vector<TrialFailure> failures;  // ascending trial index
    /// Worst observed value: max deviation for equivalence/invariance, min
    /// margin for monotonicity/majorization.
    double worst = 0.0;
    std::vector<std::pair<std::string, double>> stats;

    bool passed() const noexcept { return failures.empty(); }
};

/// Runs one suite. Throws InvalidInput for trials == 0 or max_dim < 2.
///
///  - equivalence: |probability-sum measure - closed form| <= tol on random
///    states of random shape.
///  - invariance: |E(U_A (x) U_B psi) - E(psi)| <= tol for Haar U_A, U_B.
///  - monotonicity: E before minus average E after a random local general
///    measurement >= -tol; even trials measure A only, odd trials both.
///  - majorization: x = T(y) must be majorized by y, satisfy
///    E(x) >= E(y) - tol and be LOCC-convertible from the matching states.
SuiteResult run_suite(Suite suite, const CampaignConfig &config);

}  // namespace entangle
