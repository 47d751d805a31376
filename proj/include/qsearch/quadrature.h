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

#ifndef QSEARCH_QUADRATURE_H
#define QSEARCH_QUADRATURE_H

#include <cstddef>
#include <functional>

namespace qsearch {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;
    std::size_t max_panels = 1000000;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t panels = 0;
};

/// Globally adaptive 7/15-point Gauss-Kronrod. The panel with the largest
/// error estimate is bisected until the summed estimate is at most
/// max(abs_tol, rel_tol * |value|).
/// Throws Error{QuadratureFailure} when max_panels is exhausted first.
QuadratureResult integrate(const std::function<double(double)> &f, double lo, double hi,
                           const QuadratureOptions &opts = {});

}  // namespace qsearch

#endif
