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
#include <random>

#include "entangle/linalg.hpp"

namespace entangle {

/// Seeded generator used by every random construction in the library.
///
/// Normal deviates come from a local Box-Muller transform over the raw
/// mt19937_64 stream rather than std::normal_distribution, whose output is
/// implementation-defined. The same seed therefore yields the same bits with
/// any standard library.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal deviate.
    double normal();
    /// Complex normal with independent N(0, 1/2) real and imaginary parts.
    Complex complex_normal();

    std::uint64_t next_u64() { return engine_(); }

   private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// rows x cols matrix of i.i.d. complex normal entries.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng &rng);

/// The first `cols` columns of a Haar-distributed rows x rows unitary
/// (Gram-Schmidt of a Ginibre matrix, which fixes R to a positive diagonal).
ComplexMatrix haar_isometry(std::size_t rows, std::size_t cols, Rng &rng);

/// Haar-distributed n x n unitary.
ComplexMatrix haar_unitary(std::size_t n, Rng &rng);

/// Flat Dirichlet(1, ..., 1) sample: a uniformly random probability vector.
RealVector random_probability_vector(std::size_t n, Rng &rng);

}  // namespace entangle
