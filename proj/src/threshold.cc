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

#include "qsearch/threshold.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsearch/dynamics.h"
#include "qsearch/error.h"

namespace qsearch {

const char *to_string(Winner w) {
    switch (w) {
        case Winner::A:
            return "A";
        case Winner::B:
            return "B";
        case Winner::Tie:
            return "Tie";
        case Winner::Neither:
            return "Neither";
    }
    return "Unknown";
}

ThresholdResult time_to_threshold(const HamiltonianParams &p, Overlap x, double thr) {
    if (!(thr >= 0.0 && thr <= 1.0)) {
        throw Error(ErrorCode::InvalidThreshold, "threshold must lie in [0, 1], got " + std::to_string(thr));
    }
    Oscillation osc = oscillation(matrix_rep(p, x), x, p.hbar());
    SearchOutcome peak = search_outcome(p, x);

    ThresholdResult result;
    result.p_max = peak.p_max;
    result.t_star = peak.t_star;
    if (thr <= x.squared()) {
        result.reachable = true;
        result.t_hit = 0.0;
        return result;
    }
    if (!osc.oscillates() || thr > peak.p_max + kUnreachableMargin) {
        return result;
    }

    // Solve mean + amplitude cos(2 w t - phase) = thr on the branch rising
    // into the first peak at 2 w t = phase. Since P(0) = x^2 < thr, that
    // crossing is the earliest one.
    // With u = (thr - mean) / amplitude, 1 - u is the shortfall below the
    // peak in units of the amplitude. Taking it from the peak directly keeps
    // thr == p_max landing exactly on t_star.
    double shortfall = std::clamp((peak.p_max - thr) / osc.amplitude, 0.0, 2.0);
    double half_angle = 2.0 * std::asin(std::sqrt(0.5 * shortfall));  // acos(u), accurate near u = 1
    double two_wt = std::max(0.0, osc.phase - half_angle);
    result.reachable = true;
    result.t_hit = two_wt / (2.0 * osc.angular_freq);
    return result;
}

ComparisonReport compare_speed(const HamiltonianParams &pa, const HamiltonianParams &pb, Overlap x,
                               double thr) {
    ComparisonReport report;
    report.params_a = pa;
    report.params_b = pb;
    report.threshold = thr;
    report.t_hit_a = time_to_threshold(pa, x, thr);
    report.t_hit_b = time_to_threshold(pb, x, thr);

    const ThresholdResult &ra = report.t_hit_a;
    const ThresholdResult &rb = report.t_hit_b;
    if (!ra.reachable && !rb.reachable) {
        report.winner = Winner::Neither;
    } else if (!rb.reachable) {
        report.winner = Winner::A;
    } else if (!ra.reachable) {
        report.winner = Winner::B;
    } else if (std::abs(*ra.t_hit - *rb.t_hit) <= 1e-12) {
        report.winner = Winner::Tie;
    } else {
        report.winner = *ra.t_hit < *rb.t_hit ? Winner::A : Winner::B;
    }
    return report;
}

}  // namespace qsearch
