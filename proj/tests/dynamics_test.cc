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
#include <random>

#include "gtest/gtest.h"

#include "qsearch/cases.h"
#include "qsearch/error.h"
#include "qsearch/spectral.h"
#include "test_util.h"

using namespace qsearch;
using qsearch::testing::dense_max;
using qsearch::testing::params;
using qsearch::testing::random_draw;

namespace {

const double kHbar = 1.0 / (2.0 * kPi);

double prob(const HamiltonianParams &p, Overlap x, double t) {
    return transition_probability(matrix_rep(p, x), x, t, p.hbar());
}

/// Two-level textbook form without the interference term. Correct only for real h12.
double in_phase_only(const MatrixRep &m, Overlap x, double t, double hbar) {
    double gap = m.diagonal_gap();
    double r = gap * gap + 4.0 * (m.h12 * m.h21).real();
    if (r == 0.0) {
        return x.squared();
    }
    double a = 0.5 * std::sqrt(r);
    double w = std::norm(gap * x.value() + 2.0 * m.h12 * x.complement()) / r;
    double s = std::sin(a * t / hbar);
    double c = std::cos(a * t / hbar);
    return w * s * s + x.squared() * c * c;
}

ErrorCode code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected qsearch::Error";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(transition_probability, farhi_gutmann_peak) {
    HamiltonianParams p = params(1.0, 1.0, {0.0, 0.0});
    Overlap x(0.5);
    EXPECT_NEAR(prob(p, x, 0.5), 1.0, 1e-12);
    EXPECT_EQ(prob(p, x, 0.0), 0.25);
    double arg = 0.5 * 0.1 / kHbar;
    EXPECT_NEAR(prob(p, x, 0.1), std::sin(arg) * std::sin(arg) + 0.25 * std::cos(arg) * std::cos(arg), 1e-14);
}

TEST(transition_probability, starts_at_overlap_squared) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; i++) {
        auto d = random_draw(rng);
        ASSERT_NEAR(prob(d.p, d.x, 0.0), d.x.squared(), 1e-15);
    }
}

TEST(transition_probability, zero_gap_is_constant) {
    HamiltonianParams p = params(0.0, 0.0, {0.0, 0.0});
    for (double t : {0.0, 0.3, 7.0}) {
        EXPECT_EQ(prob(p, Overlap(0.4), t), Overlap(0.4).squared());
    }
    EXPECT_FALSE(t_star(p, Overlap(0.4)).has_value());
}

TEST(transition_probability, rejects_negative_time) {
    MatrixRep m = matrix_rep(params(1.0, 1.0, {0.0, 0.0}), Overlap(0.5));
    EXPECT_EQ(code_of([&] { transition_probability(m, Overlap(0.5), -1.0, kHbar); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { transition_probability(m, Overlap(0.5), 1.0, 0.0); }), ErrorCode::NonPositiveScale);
}

TEST(transition_probability, matches_in_phase_form_for_real_off_diagonal) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> tt(0.0, 2.0);
    for (int i = 0; i < 500; i++) {
        HamiltonianParams p = params(coef(rng), coef(rng), {coef(rng), 0.0});
        Overlap x(0.05 + 0.9 * (i + 0.5) / 500);
        double t = tt(rng);
        MatrixRep m = matrix_rep(p, x);
        ASSERT_NEAR(transition_probability(m, x, t, kHbar), in_phase_only(m, x, t, kHbar), 1e-12);
    }
}

TEST(transition_probability, complex_off_diagonal_has_interference) {
    // Fenner's Hamiltonian reaches certainty; dropping the cross term would cap it at 1 - x^2.
    Overlap x(0.5);
    HamiltonianParams p = fenner_params(1.0, x);
    MatrixRep m = matrix_rep(p, x);
    double peak = dense_max([&](double t) { return propagate_numeric(m, x, t, kHbar); }, 0.0, 0.5, 200);
    EXPECT_NEAR(peak, 1.0, 1e-8);
    EXPECT_NEAR(search_outcome(p, x).p_max, 1.0, 1e-12);
    double in_phase_peak = dense_max([&](double t) { return in_phase_only(m, x, t, kHbar); }, 0.0, 0.5, 200);
    EXPECT_NEAR(in_phase_peak, 0.75, 1e-9);
}

TEST(transition_probability, periodic_and_bounded) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; i++) {
        auto d = random_draw(rng);
        MatrixRep m = matrix_rep(d.p, d.x);
        double a = gap_parameter(m);
        ASSERT_GT(a, 0.0);
        double period = kPi * kHbar / a;
        for (int k = 0; k < 20; k++) {
            double t = 0.1 * k;
            double v = transition_probability(m, d.x, t, kHbar);
            ASSERT_GE(v, -1e-12);
            ASSERT_LE(v, 1.0 + 1e-12);
            ASSERT_NEAR(transition_probability(m, d.x, t + period, kHbar), v, 1e-12);
        }
    }
}

TEST(amplitude, initial_value_and_peak) {
    Overlap x(0.5);
    Spectrum s = spectrum(matrix_rep(params(1.0, 1.0, {0.0, 0.0}), x));
    cplx a0 = amplitude(s, x, 0.0, kHbar);
    EXPECT_NEAR(a0.real(), 0.5, 1e-15);
    EXPECT_NEAR(a0.imag(), 0.0, 1e-15);
    EXPECT_NEAR(std::norm(amplitude(s, x, 0.5, kHbar)), 1.0, 1e-12);
}

TEST(amplitude, squared_modulus_is_transition_probability) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> tt(0.0, 2.0);
    for (int i = 0; i < 1000; i++) {
        auto d = random_draw(rng);
        MatrixRep m = matrix_rep(d.p, d.x);
        double t = tt(rng);
        ASSERT_NEAR(std::norm(amplitude(spectrum(m), d.x, t, kHbar)), transition_probability(m, d.x, t, kHbar),
                    1e-12);
    }
}

TEST(amplitude, requires_eigen_coefficients) {
    Spectrum s = spectrum(MatrixRep{1.0, 0.0, 0.0, 2.0});
    EXPECT_EQ(code_of([&] { amplitude(s, Overlap(0.5), 0.1, kHbar); }), ErrorCode::DegenerateOffDiagonal);
    EXPECT_EQ(code_of([&] { tilde_coeffs(s, Overlap(0.5)); }), ErrorCode::DegenerateOffDiagonal);
}

TEST(tilde_coeffs, sum_is_overlap) {
    Overlap x(0.5);
    TildeCoeffs c = tilde_coeffs(spectrum(matrix_rep(params(1.0, 1.0, {0.0, 0.0}), x)), x);
    EXPECT_NEAR(std::abs(c.a_tilde + c.b_tilde - 0.5), 0.0, 1e-15);
    EXPECT_NEAR((c.a_tilde * std::conj(c.b_tilde)).imag(), 0.0, 1e-14);
}

TEST(tilde_coeffs, sum_is_overlap_random) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 1000; i++) {
        auto d = random_draw(rng);
        TildeCoeffs c = tilde_coeffs(spectrum(matrix_rep(d.p, d.x)), d.x);
        ASSERT_NEAR(std::abs(c.a_tilde + c.b_tilde - d.x.value()), 0.0, 1e-12);
    }
}

TEST(tilde_coeffs, trig_identity) {
    std::mt19937_64 rng(10);
    for (int i = 0; i < 100; i++) {
        auto d = random_draw(rng);
        TildeCoeffs c = tilde_coeffs(spectrum(matrix_rep(d.p, d.x)), d.x);
        cplx at = c.a_tilde;
        cplx bt = c.b_tilde;
        for (int k = 0; k < 100; k++) {
            double th = 2.0 * kPi * k / 100.0;
            double lhs = std::norm(at) + std::norm(bt) + 2.0 * (at * std::conj(bt)).real() * std::cos(2.0 * th);
            double rhs = std::norm(at - bt) * std::sin(th) * std::sin(th) +
                         std::norm(at + bt) * std::cos(th) * std::cos(th);
            ASSERT_NEAR(lhs, rhs, 1e-12);
        }
    }
}

TEST(p_max, examples) {
    Overlap x(0.5);
    EXPECT_NEAR(p_max(params(0.5, 1.0, {1.0, 0.0}), x), 0.9758, 1e-3);
    EXPECT_NEAR(p_max(params(0.5, 1.0, {1.0, 0.0}), x), 121.0 / 124.0, 1e-14);
    EXPECT_NEAR(p_max(params(0.7, 0.7, {-1.3, 0.0}), Overlap(0.2)), 1.0, 1e-12);
    EXPECT_NEAR(p_max(params(1.0, 0.5, {0.0, 0.0}), x), 0.75, 1e-14);
    EXPECT_EQ(p_max(params(0.0, 0.0, {0.0, 0.0}), x), 0.25);
}

TEST(p_max, both_published_forms_agree) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 1000; i++) {
        auto d = random_draw(rng);
        ASSERT_NEAR(p_max(d.p, d.x), p_max_matrix_form(matrix_rep(d.p, d.x), d.x), 1e-10);
    }
}

TEST(p_max, equals_numeric_peak_for_real_off_diagonal) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    int checked = 0;
    for (int i = 0; i < 300; i++) {
        Overlap x(0.05 + 0.9 * (i + 0.5) / 300);
        HamiltonianParams p = params(coef(rng), coef(rng), {coef(rng), 0.0});
        MatrixRep m = matrix_rep(p, x);
        double pm = p_max(p, x);
        if (pm < x.squared()) {
            continue;  // the peak is then the starting value
        }
        double period = kPi * kHbar / gap_parameter(m);
        double numeric = dense_max([&](double t) { return transition_probability(m, x, t, kHbar); }, 0.0, period,
                                   2000);
        ASSERT_NEAR(pm, numeric, 1e-9);
        ASSERT_NEAR(prob(p, x, *t_star(p, x)), pm, 1e-12);
        checked++;
    }
    EXPECT_GT(checked, 100);
}

TEST(t_star, examples) {
    Overlap x(0.5);
    EXPECT_NEAR(*t_star(params(0.5, 0.5, {1.0, 0.0}), x), 0.2, 1e-14);
    EXPECT_NEAR(*t_star(params(0.5, 1.0, {1.0, 0.0}), x), 1.0 / (2.0 * std::sqrt(7.75)), 1e-14);
    EXPECT_NEAR(*t_star(params(0.5, 1.0, {1.0, 0.0}), x), 0.17957, 5e-5);
    EXPECT_FALSE(t_star(params(0.0, 0.0, {0.0, 0.0}), x).has_value());
}

TEST(search_outcome, is_the_exact_supremum) {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 300; i++) {
        auto d = random_draw(rng);
        MatrixRep m = matrix_rep(d.p, d.x);
        SearchOutcome s = search_outcome(d.p, d.x);
        ASSERT_TRUE(s.t_star.has_value());
        ASSERT_GE(s.p_max, d.x.squared() - 1e-15);
        ASSERT_LE(s.p_max, 1.0 + 1e-12);
        ASSERT_NEAR(transition_probability(m, d.x, *s.t_star, kHbar), s.p_max, 1e-12);
        double period = kPi * kHbar / s.gap_a;
        double numeric = dense_max([&](double t) { return transition_probability(m, d.x, t, kHbar); }, 0.0, period,
                                   2000);
        ASSERT_NEAR(s.p_max, numeric, 1e-9);
        ASSERT_LE(*s.t_star, period);
        // Nothing before t* exceeds the peak.
        for (int k = 0; k < 400; k++) {
            double t = *s.t_star * k / 400.0;
            ASSERT_LE(transition_probability(m, d.x, t, kHbar), s.p_max + 1e-12);
        }
    }
}

TEST(search_outcome, oscillation_matches_closed_form) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 200; i++) {
        auto d = random_draw(rng);
        MatrixRep m = matrix_rep(d.p, d.x);
        Oscillation o = oscillation(m, d.x, kHbar);
        ASSERT_GE(o.phase, 0.0);
        ASSERT_LT(o.phase, 2.0 * kPi);
        for (double t : {0.0, 0.13, 0.7, 1.9}) {
            ASSERT_NEAR(o.at(t), transition_probability(m, d.x, t, kHbar), 1e-12);
        }
    }
}

TEST(propagate_numeric, farhi_gutmann_peak) {
    Overlap x(0.5);
    MatrixRep m = matrix_rep(params(1.0, 1.0, {0.0, 0.0}), x);
    EXPECT_NEAR(propagate_numeric(m, x, 0.5, kHbar), 1.0, 1e-8);
    EXPECT_EQ(propagate_numeric(m, x, 0.0, kHbar), 0.25);
}

TEST(propagate_numeric, agrees_with_closed_form) {
    std::mt19937_64 rng(16);
    std::uniform_real_distribution<double> tt(0.0, 2.0);
    for (int i = 0; i < 200; i++) {
        auto d = random_draw(rng);
        MatrixRep m = matrix_rep(d.p, d.x);
        double t = tt(rng);
        ASSERT_NEAR(propagate_numeric(m, d.x, t, kHbar), transition_probability(m, d.x, t, kHbar), 1e-8);
    }
}

TEST(propagate_numeric, step_budget) {
    HamiltonianParams p = params(1.0, 2.0, {1.0, 1.0}, 1e12);
    MatrixRep m = matrix_rep(p, Overlap(0.5));
    EXPECT_EQ(code_of([&] { propagate_numeric(m, Overlap(0.5), 1e3, kHbar); }), ErrorCode::StepUnderflow);
}

TEST(sample_curve, farhi_gutmann_three_nodes) {
    HamiltonianParams p = params(1.0, 1.0, {0.0, 0.0});
    Overlap x(0.5);
    ProbabilityCurve c = sample_curve(p, x, 0.5, 3);
    ASSERT_EQ(c.times.size(), 3u);
    ASSERT_EQ(c.probs.size(), 3u);
    EXPECT_EQ(c.times[0], 0.0);
    EXPECT_EQ(c.times[1], 0.25);
    EXPECT_EQ(c.times[2], 0.5);
    EXPECT_EQ(c.probs[0], 0.25);
    EXPECT_NEAR(c.probs[1], prob(p, x, 0.25), 1e-15);
    EXPECT_NEAR(c.probs[2], 1.0, 1e-12);
}

TEST(sample_curve, rising_until_peak) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int i = 0; i < 100; i++) {
        HamiltonianParams p = params(coef(rng), coef(rng), {coef(rng), 0.0});
        Overlap x(0.05 + 0.9 * (i + 0.5) / 100);
        if (p_max(p, x) <= x.squared()) {
            continue;
        }
        ProbabilityCurve c = sample_curve(p, x, *t_star(p, x), 257);
        EXPECT_EQ(c.probs.front(), x.squared());
        for (std::size_t k = 1; k < c.probs.size(); k++) {
            ASSERT_GE(c.probs[k], c.probs[k - 1] - 1e-14);
        }
    }
}

TEST(sample_curve, invalid_grid) {
    HamiltonianParams p = params(1.0, 1.0, {0.0, 0.0});
    EXPECT_EQ(code_of([&] { sample_curve(p, Overlap(0.5), 1.0, 1); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { sample_curve(p, Overlap(0.5), 0.0, 10); }), ErrorCode::InvalidArgument);
}
