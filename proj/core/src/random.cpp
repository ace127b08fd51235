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

#include "entangle/random.hpp"

#include <cmath>
#include <numbers>

#include "entangle/error.hpp"

namespace entangle {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 == 0.0);
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng) {
    ComplexMatrix m(rows, cols);
    for (auto &z : m.data()) z = rng.complex_normal();
    return m;
}

ComplexMatrix haar_isometry(std::size_t rows, std::size_t cols, Rng &rng) {
    if (cols > rows || cols == 0) throw InvalidInput("isometry needs 1 <= cols <= rows");
    // A Ginibre matrix has full column rank with probability one; redraw on
    // the measure-zero failure.
    for (;;) {
        try {
            return orthonormalize_columns(ginibre(rows, cols, rng));
        } catch (const NumericalFailure &) {
        }
    }
}

ComplexMatrix haar_unitary(std::size_t n, Rng &rng) { return haar_isometry(n, n, rng); }

RealVector random_probability_vector(std::size_t n, Rng &rng) {
    RealVector p(n);
    double total = 0.0;
    for (auto &x : p) {
        double u = 0.0;
        do {
            u = rng.uniform();
        } while (u == 0.0);
        x = -std::log(u);
        total += x;
    }
    for (auto &x : p) x /= total;
    return p;
}

}  // namespace entangle
