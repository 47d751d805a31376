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

#include "qsearch/overlap_prior.h"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <string>

#include "qsearch/error.h"
#include "qsearch/hamiltonian.h"
#include "qsearch/quadrature.h"

namespace qsearch {

namespace {

void require_spec(const PriorSpec &spec) {
    if (spec.hilbert_dim < 2) {
        throw Error(ErrorCode::InvalidArgument, "Hilbert dimension must be at least 2.");
    }
    if (!(spec.sigma_sq > 0.0) || !std::isfinite(spec.sigma_sq) || !std::isfinite(spec.mu_theta)) {
        throw Error(ErrorCode::InvalidArgument, "sigma^2 must be positive and mu_theta finite.");
    }
}

void require_dim(std::uint64_t n) {
    if (n < 2) {
        throw Error(ErrorCode::InvalidArgument, "Hilbert dimension must be at least 2.");
    }
}

double sphere_exponent(std::uint64_t n) {
    return 2.0 * static_cast<double>(n) - 2.0;
}

/// Prob = head / (head + tail) with head over [0, theta_bar] and tail over
/// [theta_bar, pi/2]. Splitting this way makes the endpoints exact.
double split_ratio(const std::function<double(double)> &f, double theta_bar, const QuadratureOptions &opts) {
    double head = integrate(f, 0.0, theta_bar, opts).value;
    double tail = integrate(f, theta_bar, kPi / 2.0, opts).value;
    double total = head + tail;
    if (!(total > 0.0)) {
        throw Error(ErrorCode::QuadratureFailure, "normalizing integral vanished.");
    }
    return head / total;
}

}  // namespace

OverlapBound::OverlapBound(double x_bar) : x_bar_(x_bar) {
    if (!(x_bar >= 0.0 && x_bar <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "overlap bound must lie in [0, 1], got " + std::to_string(x_bar));
    }
}

double OverlapBound::theta_bar() const {
    return std::acos(x_bar_);
}

double target_density(double theta, const PriorSpec &spec) {
    require_spec(spec);
    double d = theta - spec.mu_theta;
    double knee = std::pow(10.0 * std::sin(theta), sphere_exponent(spec.hilbert_dim));
    return std::exp(-d * d / (2.0 * spec.sigma_sq)) / (1.0 + knee);
}

double prob_overlap_at_least(OverlapBound bound, const PriorSpec &spec) {
    require_spec(spec);
    double exponent = sphere_exponent(spec.hilbert_dim);
    // target_density(theta) * sin^(2N-2)(theta), scaled by 10^(2N-2) so the
    // integrand stays O(1); the constant cancels in the ratio.
    auto integrand = [&](double theta) {
        double d = theta - spec.mu_theta;
        double q = std::pow(10.0 * std::sin(theta), exponent);
        return std::exp(-d * d / (2.0 * spec.sigma_sq)) * (q / (1.0 + q));
    };
    return split_ratio(integrand, bound.theta_bar(), QuadratureOptions{1e-12, 1e-12, 1000000});
}

double uniform_prob_overlap_analytic(OverlapBound bound, std::uint64_t n) {
    require_dim(n);
    double x = bound.x_bar();
    double u = (1.0 - x) * (1.0 + x);  // sin^2(theta_bar)
    return boost::math::ibeta(static_cast<double>(n) - 0.5, 0.5, u);
}

double uniform_prob_overlap_quadrature(OverlapBound bound, std::uint64_t n) {
    require_dim(n);
    double exponent = sphere_exponent(n);
    auto integrand = [exponent](double theta) { return std::pow(std::sin(theta), exponent); };
    return split_ratio(integrand, bound.theta_bar(), QuadratureOptions{0.0, 1e-12, 1000000});
}

double uniform_prob_overlap(OverlapBound bound, std::uint64_t n) {
    double analytic = uniform_prob_overlap_analytic(bound, n);
    double numeric = uniform_prob_overlap_quadrature(bound, n);
    if (std::abs(analytic - numeric) > 1e-10) {
        throw Error(ErrorCode::QuadratureFailure, "incomplete-beta and quadrature routes disagree.");
    }
    return analytic;
}

}  // namespace qsearch
