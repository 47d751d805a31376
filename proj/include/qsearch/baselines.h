// Copyright 2026 The qsearch Authors
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

#ifndef QSEARCH_BASELINES_H
#define QSEARCH_BASELINES_H

#include <cstdint>

#include "qsearch/hamiltonian.h"

namespace qsearch {

struct GroverQuery {
    std::uint64_t k = 0;
    std::uint64_t n_items = 2;
};

/// sin^2((2k + 1) atan(1 / sqrt(N - 1))).
/// Throws Error{InvalidArgument} when N < 2.
double grover_probability(GroverQuery q);

/// Iteration count maximizing grover_probability; ties go to the smaller k.
std::uint64_t grover_optimal_k(std::uint64_t n_items);

/// Analog search with alpha = delta = 1, beta = 0:
/// sin^2(E x t / hbar) + x^2 cos^2(E x t / hbar).
double farhi_gutmann_probability(double t, Overlap x, double energy, double planck);

}  // namespace qsearch

#endif
