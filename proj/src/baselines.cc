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

#include "qsearch/baselines.h"

#include <cmath>
#include <string>

#include "qsearch/error.h"

namespace qsearch {

namespace {

double grover_angle(std::uint64_t n_items) {
    if (n_items < 2) {
        throw Error(ErrorCode::InvalidArgument, "Grover search needs N >= 2, got " + std::to_string(n_items));
    }
    return std::atan2(1.0, std::sqrt(static_cast<double>(n_items - 1)));
}

double grover_at(std::uint64_t k, double angle) {
    double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * angle);
    return s * s;
}

}  // namespace

double grover_probability(GroverQuery q) {
    return grover_at(q.k, grover_angle(q.n_items));
}

std::uint64_t grover_optimal_k(std::uint64_t n_items) {
    double angle = grover_angle(n_items);
    double center = (kPi / 4.0) / angle - 0.5;
    auto lo = static_cast<std::uint64_t>(std::max(0.0, std::floor(center)));
    std::uint64_t hi = lo + 1;
    double p_lo = grover_at(lo, angle);
    double p_hi = grover_at(hi, angle);
    return p_hi > p_lo + 1e-12 ? hi : lo;
}

double farhi_gutmann_probability(double t, Overlap x, double energy, double planck) {
    if (!std::isfinite(t) || t < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "time must be finite and nonnegative.");
    }
    if (!(energy > 0.0) || !(planck > 0.0)) {
        throw Error(ErrorCode::NonPositiveScale, "E and h must be positive.");
    }
    double hbar = planck / (2.0 * kPi);
    double phase = energy * x.value() * t / hbar;
    double s = std::sin(phase);
    double c = std::cos(phase);
    return s * s + x.squared() * c * c;
}

}  // namespace qsearch
