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

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "entangle/error.hpp"

namespace entangle {

namespace {

void require_levels(std::size_t n) {
    if (n < 2) {
        throw UndefinedMeasure("needs at least 2 Schmidt levels, got " + std::to_string(n));
    }
}

double sum_of_squares(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

}  // namespace

double entanglement_probability_sum(const ProbabilityTable &table, std::size_t n_schmidt) {
    require_levels(n_schmidt);
    const double n = static_cast<double>(n_schmidt);
    return n / (2.0 * (n - 1.0)) * correlation_matrix(table).sum();
}

double entanglement_closed_form(std::span<const double> lambdas) {
    require_levels(lambdas.size());
    validate_probability_vector(lambdas, "Schmidt vector");
    const double n = static_cast<double>(lambdas.size());
    return std::max(0.0, n / (n - 1.0) * (1.0 - sum_of_squares(lambdas)));
}

double entanglement(const PureState &psi) { return entanglement_closed_form(schmidt_decompose(psi).lambdas); }

double entropy_of_entanglement(std::span<const double> lambdas) {
    double s = 0.0;
    for (double x : lambdas)
        if (x > 0.0) s -= x * std::log(x);
    return std::max(s, 0.0);
}

double two_entropy(std::span<const double> lambdas) { return std::max(0.0, 1.0 - sum_of_squares(lambdas)); }

double renyi2_entropy(std::span<const double> lambdas) { return std::max(0.0, -std::log(sum_of_squares(lambdas))); }

double power_sum(std::span<const double> x, double q) {
    if (!(q >= 1.0)) throw InvalidInput("power_sum needs q >= 1");
    double s = 0.0;
    for (double v : x) {
        if (v < 0.0) throw InvalidInput("power_sum needs nonnegative entries");
        s += std::pow(v, q);
    }
    return s;
}

bool majorizes(std::span<const double> x, std::span<const double> y) {
    validate_probability_vector(x, "x");
    validate_probability_vector(y, "y");
    const std::size_t n = std::max(x.size(), y.size());
    RealVector xs(x.begin(), x.end());
    RealVector ys(y.begin(), y.end());
    xs.resize(n, 0.0);
    ys.resize(n, 0.0);
    std::sort(xs.begin(), xs.end(), std::greater<>());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    double px = 0.0;
    double py = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        px += xs[k];
        py += ys[k];
        if (px > py + kMajorizationSlack) return false;
    }
    return true;
}

RealVector t_transform(std::span<const double> x, std::size_t i, std::size_t j, double t) {
    if (i >= x.size() || j >= x.size()) throw InvalidInput("T-transform index out of range");
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("T-transform weight must be in [0, 1]");
    RealVector y(x.begin(), x.end());
    y[i] = t * x[i] + (1.0 - t) * x[j];
    y[j] = t * x[j] + (1.0 - t) * x[i];
    return y;
}

EntanglementReport make_report(const PureState &psi) {
    const SchmidtDecomposition sd = schmidt_decompose(psi);
    EntanglementReport r;
    r.e_probability_sum = entanglement_probability_sum(probability_table(psi, sd), sd.size());
    r.e_closed_form = entanglement_closed_form(sd.lambdas);
    r.entropy_of_entanglement = entropy_of_entanglement(sd.lambdas);
    r.two_entropy = two_entropy(sd.lambdas);
    r.renyi2 = renyi2_entropy(sd.lambdas);
    r.schmidt_rank = sd.rank();
    r.lambdas = sd.lambdas;
    return r;
}

}  // namespace entangle
