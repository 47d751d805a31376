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

#ifndef QSEARCH_THRESHOLD_H
#define QSEARCH_THRESHOLD_H

#include <optional>

#include "qsearch/hamiltonian.h"

namespace qsearch {

/// A threshold above the peak by more than this is unreachable.
inline constexpr double kUnreachableMargin = 1e-12;

struct ThresholdResult {
    bool reachable = false;
    std::optional<double> t_hit;
    double p_max = 0.0;
    std::optional<double> t_star;
};

enum class Winner { A, B, Tie, Neither };

struct ComparisonReport {
    HamiltonianParams params_a;
    HamiltonianParams params_b;
    double threshold = 0.0;
    ThresholdResult t_hit_a;
    ThresholdResult t_hit_b;
    Winner winner = Winner::Neither;
};

const char *to_string(Winner w);

/// Earliest t >= 0 with P(t) = thr. P is a pure sinusoid in t, so this is an
/// analytic inversion. Thresholds at or below x^2 are hit at t = 0.
/// Throws Error{InvalidThreshold} when thr is outside [0, 1].
ThresholdResult time_to_threshold(const HamiltonianParams &p, Overlap x, double thr);

/// Smaller hitting time wins; times within 1e-12 tie.
ComparisonReport compare_speed(const HamiltonianParams &pa, const HamiltonianParams &pb, Overlap x,
                               double thr);

}  // namespace qsearch

#endif
