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

#include "qsearch/quadrature.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "qsearch/error.h"

namespace qsearch {

namespace {

// 15-point Kronrod abscissae on [0, 1]; odd indices are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Panel &other) const {
        return error < other.error;
    }
};

Panel kronrod(const std::function<double(double)> &f, double lo, double hi) {
    double center = 0.5 * (lo + hi);
    double half = 0.5 * (hi - lo);
    double fc = f(center);
    double kronrod_sum = fc * kWgk[7];
    double gauss_sum = fc * kWg[3];
    double abs_sum = std::abs(kronrod_sum);
    for (int j = 0; j < 7; j++) {
        double dx = half * kXgk[j];
        double f1 = f(center - dx);
        double f2 = f(center + dx);
        kronrod_sum += kWgk[j] * (f1 + f2);
        abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            gauss_sum += kWg[j / 2] * (f1 + f2);
        }
    }
    double value = kronrod_sum * half;
    double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::abs(half);
    double error = std::max(std::abs((kronrod_sum - gauss_sum) * half), roundoff);
    if (!std::isfinite(value) || !std::isfinite(error)) {
        throw Error(ErrorCode::QuadratureFailure, "integrand is not finite on the panel.");
    }
    return Panel{lo, hi, value, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)> &f, double lo, double hi,
                           const QuadratureOptions &opts) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw Error(ErrorCode::InvalidArgument, "integration bounds must be finite.");
    }
    if (lo == hi) {
        return QuadratureResult{0.0, 0.0, 0};
    }
    if (lo > hi) {
        QuadratureResult r = integrate(f, hi, lo, opts);
        r.value = -r.value;
        return r;
    }

    std::priority_queue<Panel> panels;
    Panel first = kronrod(f, lo, hi);
    double total = first.value;
    double total_err = first.error;
    panels.push(first);

    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
    while (total_err > target()) {
        if (panels.size() >= opts.max_panels) {
            throw Error(ErrorCode::QuadratureFailure, "tolerance not met within the panel budget.");
        }
        Panel worst = panels.top();
        panels.pop();
        double mid = 0.5 * (worst.lo + worst.hi);
        Panel left = kronrod(f, worst.lo, mid);
        Panel right = kronrod(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum from the panels so the running updates leave no drift.
    QuadratureResult result;
    result.panels = panels.size();
    while (!panels.empty()) {
        result.value += panels.top().value;
        result.error += panels.top().error;
        panels.pop();
    }
    return result;
}

}  // namespace qsearch
