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

#include "qsearch/dynamics.h"

#include <cmath>
#include <string>

#include "qsearch/error.h"

namespace qsearch {

namespace {

void require_hbar(double hbar) {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw Error(ErrorCode::NonPositiveScale, "hbar must be positive.");
    }
}

void require_time(double t, double hbar) {
    if (!std::isfinite(t) || t < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "time must be finite and nonnegative, got " + std::to_string(t));
    }
    require_hbar(hbar);
}

const EigenCoeffs &require_coeffs(const Spectrum &spec) {
    if (!spec.coeffs) {
        throw Error(ErrorCode::DegenerateOffDiagonal, "spectrum has no eigenvector coefficients (h21 == 0).");
    }
    if (spec.coeffs->a == spec.coeffs->b) {
        throw Error(ErrorCode::DegenerateOffDiagonal, "A == B; the gap vanishes.");
    }
    return *spec.coeffs;
}

/// |(h11 - h22) x + 2 h12 sqrt(1 - x^2)|^2, the numerator of the sin^2 weight.
double in_phase_numerator(const MatrixRep &m, Overlap x) {
    return std::norm(m.diagonal_gap() * x.value() + 2.0 * m.h12 * x.complement());
}

}  // namespace

double Oscillation::at(double t) const {
    return mean + amplitude * std::cos(2.0 * angular_freq * t - phase);
}

double transition_probability(const MatrixRep &m, Overlap x, double t, double hbar) {
    require_time(t, hbar);
    double r = gap_radicand(m);
    if (r == 0.0) {
        return x.squared();
    }
    double a = 0.5 * std::sqrt(r);
    double theta = a * t / hbar;
    double s = std::sin(theta);
    double c = std::cos(theta);
    double interference = x.value() * x.complement() * m.h12.imag() * std::sin(2.0 * theta) / a;
    return in_phase_numerator(m, x) / r * s * s + x.squared() * c * c + interference;
}

TildeCoeffs tilde_coeffs(const Spectrum &spec, Overlap x) {
    const EigenCoeffs &c = require_coeffs(spec);
    double xv = x.value();
    double s = x.complement();
    cplx denom = c.a - c.b;
    return TildeCoeffs{c.a * (xv - c.b * s) / denom, -c.b * (xv - c.a * s) / denom};
}

cplx amplitude(const Spectrum &spec, Overlap x, double t, double hbar) {
    require_time(t, hbar);
    TildeCoeffs tc = tilde_coeffs(spec, x);
    double theta = spec.gap_a * t / hbar;
    cplx global = std::polar(1.0, -spec.mean() * t / hbar);
    return global * (tc.a_tilde * std::polar(1.0, theta) + tc.b_tilde * std::polar(1.0, -theta));
}

Oscillation oscillation(const MatrixRep &m, Overlap x, double hbar) {
    require_hbar(hbar);
    double r = gap_radicand(m);
    if (r == 0.0) {
        return Oscillation{x.squared(), 0.0, 0.0, 0.0};
    }
    double a = 0.5 * std::sqrt(r);
    // P = A sin^2 + B cos^2 + C sin(2 theta)
    //   = (A + B)/2 + (B - A)/2 cos(2 theta) + C sin(2 theta).
    double weight_sin = in_phase_numerator(m, x) / r;
    double weight_cos = x.squared();
    double weight_cross = x.value() * x.complement() * m.h12.imag() / a;
    double cos_part = 0.5 * (weight_cos - weight_sin);
    double phase = std::atan2(weight_cross, cos_part);
    if (phase < 0.0) {
        phase += 2.0 * kPi;
    }
    return Oscillation{0.5 * (weight_sin + weight_cos), std::hypot(cos_part, weight_cross), phase, a / hbar};
}

double p_max(const HamiltonianParams &p, Overlap x) {
    // The published ratio, regrouped as sums of squares in u = Re(beta) + delta x
    // so that a near-vanishing gap does not cancel catastrophically.
    double xv = x.value();
    double one_minus_x2 = (1.0 - xv) * (1.0 + xv);
    double eps = p.alpha - p.delta;
    double u = p.beta.real() + p.delta * xv;
    double v = p.beta.imag();
    double num_re = (p.alpha + p.delta) * xv + 2.0 * p.beta.real();
    double num_im = 2.0 * v * one_minus_x2;
    double gap = eps + 2.0 * xv * u;
    double num = num_re * num_re + num_im * num_im;
    double den = gap * gap + 4.0 * one_minus_x2 * (u * u + v * v);
    if (den <= 1e-300) {
        return x.squared();
    }
    return num / den;
}

double p_max_matrix_form(const MatrixRep &m, Overlap x) {
    double r = gap_radicand(m);
    if (r == 0.0) {
        return x.squared();
    }
    return in_phase_numerator(m, x) / r;
}

std::optional<double> t_star(const HamiltonianParams &p, Overlap x) {
    double a = gap_parameter(matrix_rep(p, x));
    if (a == 0.0) {
        return std::nullopt;
    }
    return kPi * p.hbar() / (2.0 * a);
}

SearchOutcome search_outcome(const HamiltonianParams &p, Overlap x) {
    MatrixRep m = matrix_rep(p, x);
    Oscillation osc = oscillation(m, x, p.hbar());
    double a = gap_parameter(m);
    if (!osc.oscillates()) {
        return SearchOutcome{x.squared(), std::nullopt, a};
    }
    return SearchOutcome{osc.mean + osc.amplitude, osc.phase / (2.0 * osc.angular_freq), a};
}

double propagate_numeric(const MatrixRep &m, Overlap x, double t, double hbar) {
    require_time(t, hbar);
    if (t == 0.0) {
        return x.squared();
    }
    double nrm = m.norm();
    double max_step = t / 100.0;
    if (nrm > 0.0) {
        max_step = std::min(max_step, hbar / (200.0 * nrm));
    }
    double steps = std::ceil(t / max_step);
    if (!(steps <= 1e9)) {
        throw Error(ErrorCode::StepUnderflow, "propagation would need more than 1e9 steps.");
    }
    auto n = static_cast<long long>(steps);
    double h = t / static_cast<double>(n);

    const cplx k{0.0, -1.0 / hbar};
    auto deriv = [&](cplx w, cplx r, cplx &dw, cplx &dr) {
        dw = k * (m.h11 * w + m.h12 * r);
        dr = k * (m.h21 * w + m.h22 * r);
    };

    cplx w = x.value();
    cplx r = x.complement();
    for (long long i = 0; i < n; i++) {
        cplx k1w, k1r, k2w, k2r, k3w, k3r, k4w, k4r;
        deriv(w, r, k1w, k1r);
        deriv(w + 0.5 * h * k1w, r + 0.5 * h * k1r, k2w, k2r);
        deriv(w + 0.5 * h * k2w, r + 0.5 * h * k2r, k3w, k3r);
        deriv(w + h * k3w, r + h * k3r, k4w, k4r);
        w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
        r += h / 6.0 * (k1r + 2.0 * k2r + 2.0 * k3r + k4r);
    }
    return std::norm(w);
}

ProbabilityCurve sample_curve(const HamiltonianParams &p, Overlap x, double t_end, std::size_t n) {
    if (n < 2 || !(t_end > 0.0) || !std::isfinite(t_end)) {
        throw Error(ErrorCode::InvalidArgument, "sample_curve needs n >= 2 and t_end > 0.");
    }
    MatrixRep m = matrix_rep(p, x);
    double hbar = p.hbar();
    ProbabilityCurve curve;
    curve.times.reserve(n);
    curve.probs.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        double t = i + 1 == n ? t_end : t_end * static_cast<double>(i) / static_cast<double>(n - 1);
        curve.times.push_back(t);
        curve.probs.push_back(transition_probability(m, x, t, hbar));
    }
    return curve;
}

}  // namespace qsearch
