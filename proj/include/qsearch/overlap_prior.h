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

#ifndef QSEARCH_OVERLAP_PRIOR_H
#define QSEARCH_OVERLAP_PRIOR_H

#include <cstdint>

namespace qsearch {

/// Non-uniform prior on the polar angle theta = arccos(x) of the target.
/// The normalization constant cancels in every ratio computed here, so it is
/// never stored.
struct PriorSpec {
    std::uint64_t hilbert_dim = 2;
    double mu_theta = 0.0;
    double sigma_sq = 1.0;
};

class OverlapBound {
   public:
    /// Throws Error{InvalidArgument} outside [0, 1].
    explicit OverlapBound(double x_bar);

    double x_bar() const noexcept {
        return x_bar_;
    }
    double theta_bar() const;

   private:
    double x_bar_;
};

/// exp(-(theta - mu)^2 / (2 sigma^2)) / (1 + (10 sin theta)^(2N - 2)), unnormalized.
double target_density(double theta, const PriorSpec &spec);

/// Prob(x >= x_bar) under the non-uniform prior.
/// Throws Error{QuadratureFailure} or Error{InvalidArgument}.
double prob_overlap_at_least(OverlapBound bound, const PriorSpec &spec);

/// Prob(x >= x_bar) for a uniformly random target:
/// I_{1 - x_bar^2}(N - 1/2, 1/2). The quadrature route is evaluated as well,
/// and Error{QuadratureFailure} is thrown if the two differ by more than 1e-10.
double uniform_prob_overlap(OverlapBound bound, std::uint64_t n);

/// Regularized incomplete beta route only.
double uniform_prob_overlap_analytic(OverlapBound bound, std::uint64_t n);

/// Quadrature route only.
double uniform_prob_overlap_quadrature(OverlapBound bound, std::uint64_t n);

}  // namespace qsearch

#endif
