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

#include "entangle/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "entangle/error.hpp"
#include "entangle/locc.hpp"
#include "entangle/measures.hpp"
#include "entangle/random.hpp"
#include "entangle/schmidt.hpp"
#include "entangle/states.hpp"

namespace entangle {

namespace {

struct TrialValue {
    double value = 0.0;
    bool passed = true;
};

std::size_t uniform_int(Rng &rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng.next_u64() % (hi - lo + 1));
}

TrialValue equivalence_trial(Rng &rng, std::size_t max_dim, double tol) {
    const std::size_t a = uniform_int(rng, 2, max_dim);
    const std::size_t b = uniform_int(rng, 2, max_dim);
    const PureState psi = random_pure_state(a, b, rng.next_u64());
    const SchmidtDecomposition sd = schmidt_decompose(psi);
    const double from_table = entanglement_probability_sum(probability_table(psi, sd), sd.size());
    const double closed = entanglement_closed_form(sd.lambdas);
    const double diff = std::abs(from_table - closed);
    return {diff, diff <= tol};
}

TrialValue invariance_trial(Rng &rng, std::size_t max_dim, double tol) {
    const std::size_t a = uniform_int(rng, 2, max_dim);
    const std::size_t b = uniform_int(rng, 2, max_dim);
    const PureState psi = random_pure_state(a, b, rng.next_u64());
    const ComplexMatrix u_a = haar_unitary(a, rng);
    const ComplexMatrix u_b = haar_unitary(b, rng);
    const double diff = std::abs(entanglement(apply_local_unitaries(psi, u_a, u_b)) - entanglement(psi));
    return {diff, diff <= tol};
}

TrialValue monotonicity_trial_value(Rng &rng, std::size_t index, std::size_t max_dim, double tol) {
    const std::size_t a = uniform_int(rng, 2, max_dim);
    const std::size_t b = uniform_int(rng, 2, max_dim);
    const PureState psi = random_pure_state(a, b, rng.next_u64());
    const std::size_t k_a = uniform_int(rng, 1, 4);
    const std::size_t k_b = index % 2 == 0 ? 1 : uniform_int(rng, 1, 4);
    const LocalMeasurementSet set_a = random_measurement_set(a, k_a, rng.next_u64());
    const LocalMeasurementSet set_b =
        index % 2 == 0 ? LocalMeasurementSet::trivial(b) : random_measurement_set(b, k_b, rng.next_u64());
    const MonotonicityTrial trial = monotonicity_trial(psi, set_a, set_b);
    return {trial.margin, trial.margin >= -tol};
}

TrialValue majorization_trial(Rng &rng, std::size_t max_dim, double tol) {
    const std::size_t n = uniform_int(rng, 2, max_dim);
    const RealVector y = random_probability_vector(n, rng);
    const std::size_t i = uniform_int(rng, 0, n - 1);
    std::size_t j = uniform_int(rng, 0, n - 2);
    if (j >= i) ++j;
    const RealVector x = t_transform(y, i, j, rng.uniform());
    const double margin = entanglement_closed_form(x) - entanglement_closed_form(y);
    const bool ordered = majorizes(x, y);
    const bool convertible = locc_transformable(schmidt_diagonal_state(x), schmidt_diagonal_state(y));
    return {margin, ordered && convertible && margin >= -tol};
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (v.size() % 2 == 1) return upper;
    return 0.5 * (upper + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid)));
}

}  // namespace

std::string_view suite_name(Suite suite) {
    switch (suite) {
        case Suite::kEquivalence:
            return "equivalence";
        case Suite::kInvariance:
            return "invariance";
        case Suite::kMonotonicity:
            return "monotonicity";
        case Suite::kMajorization:
            return "majorization";
    }
    return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : kAllSuites)
        if (suite_name(s) == name) return s;
    return std::nullopt;
}

double default_tolerance(Suite suite) { return suite == Suite::kMajorization ? 1e-12 : 1e-9; }

SuiteResult run_suite(Suite suite, const CampaignConfig &config) {
    if (config.trials == 0) throw InvalidInput("campaign needs at least one trial");
    if (config.max_dim < 2) throw InvalidInput("campaign needs max_dim >= 2");
    const double tol = config.tolerance.value_or(default_tolerance(suite));

    std::vector<TrialValue> values(config.trials);
    auto run_one = [&](std::size_t index) {
        Rng rng(config.seed + index);
        switch (suite) {
            case Suite::kEquivalence:
                values[index] = equivalence_trial(rng, config.max_dim, tol);
                break;
            case Suite::kInvariance:
                values[index] = invariance_trial(rng, config.max_dim, tol);
                break;
            case Suite::kMonotonicity:
                values[index] = monotonicity_trial_value(rng, index, config.max_dim, tol);
                break;
            case Suite::kMajorization:
                values[index] = majorization_trial(rng, config.max_dim, tol);
                break;
        }
    };

    const std::size_t jobs = std::clamp<std::size_t>(config.jobs, 1, config.trials);
    if (jobs == 1) {
        for (std::size_t i = 0; i < config.trials; ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < config.trials; i = next++) run_one(i);
            });
        }
    }

    SuiteResult result{suite, tol, config.trials, {}, 0.0, {}};
    const bool deviation = suite == Suite::kEquivalence || suite == Suite::kInvariance;
    result.worst = values.front().value;
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i].value;
        result.worst = deviation ? std::max(result.worst, v) : std::min(result.worst, v);
        sum += v;
        if (!values[i].passed) result.failures.push_back({i, config.seed + i, v});
    }
    result.stats.emplace_back(deviation ? "max_deviation" : "min_margin", result.worst);
    result.stats.emplace_back(deviation ? "mean_deviation" : "mean_margin", sum / static_cast<double>(values.size()));
    if (suite == Suite::kMonotonicity) {
        std::vector<double> one_sided;
        for (std::size_t i = 0; i < values.size(); i += 2) one_sided.push_back(values[i].value);
        result.stats.emplace_back("median_one_sided_margin", median(std::move(one_sided)));
    }
    return result;
}

}  // namespace entangle
