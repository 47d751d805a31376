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

#ifndef QSEARCH_DYNAMICS_H
#define QSEARCH_DYNAMICS_H

#include <cstddef>
#include <optional>
#include <vector>

#include "qsearch/hamiltonian.h"
#include "qsearch/spectral.h"

namespace qsearch {

/// Weights of the two eigen-phases in the target amplitude,
/// <w|U(t)|s> = exp(-i mean t / hbar) [a_tilde e^{i a t / hbar} + b_tilde e^{-i a t / hbar}].
struct TildeCoeffs {
    cplx a_tilde{0.0, 0.0};
    cplx b_tilde{0.0, 0.0};
};

/// The exact success probability written as a single sinusoid,
///
///     P(t) = mean + amplitude * cos(2 * angular_freq * t - phase),
///
/// with angular_freq = a / hbar and phase in [0, 2 pi). A real off-diagonal
/// element gives phase 0 or pi.
struct Oscillation {
    double mean = 0.0;
    double amplitude = 0.0;
    double phase = 0.0;
    double angular_freq = 0.0;

    double at(double t) const;
    bool oscillates() const {
        return angular_freq > 0.0 && amplitude > 0.0;
    }
};

/// Supremum of P(t) over t >= 0 and the first time it is attained.
struct SearchOutcome {
    double p_max = 0.0;
    /// nullopt means there is no oscillation: P(t) is constant.
    std::optional<double> t_star;
    double gap_a = 0.0;
};

struct ProbabilityCurve {
    std::vector<double> times;
    std::vector<double> probs;
};

/// |<w| exp(-i H t / hbar) |s>|^2 in closed form.
///
/// The sin^2/cos^2 part is the familiar two-level result. The extra
/// x sqrt(1-x^2) Im(h12) sin(2at/hbar) / a term is the interference between
/// the two eigen-phases, and it vanishes when h12 is real. Nothing here
/// divides by h21. When a == 0 this returns x^2.
double transition_probability(const MatrixRep &m, Overlap x, double t, double hbar);

/// Target amplitude through the eigen-decomposition.
/// Throws Error{DegenerateOffDiagonal} when the spectrum has no A/B.
cplx amplitude(const Spectrum &spec, Overlap x, double t, double hbar);

/// Throws Error{DegenerateOffDiagonal} when the spectrum has no A/B.
TildeCoeffs tilde_coeffs(const Spectrum &spec, Overlap x);

Oscillation oscillation(const MatrixRep &m, Overlap x, double hbar);

/// Peak of the in-phase sinusoid, written directly in alpha, beta, delta, x.
/// This is the true maximum of P(t) when Im(h12) == 0 and the sin^2
/// coefficient is at least x^2. search_outcome() handles every other case.
/// Returns x^2 when the gap vanishes.
double p_max(const HamiltonianParams &p, Overlap x);

/// The same peak as p_max(), written from the matrix elements:
/// |(h11-h22) x + 2 h12 sqrt(1-x^2)|^2 / ((h11-h22)^2 + 4 h12 h21).
double p_max_matrix_form(const MatrixRep &m, Overlap x);

/// pi hbar / (2a); nullopt when a == 0.
std::optional<double> t_star(const HamiltonianParams &p, Overlap x);

/// The exact maximum of transition_probability() and the first time it occurs.
SearchOutcome search_outcome(const HamiltonianParams &p, Overlap x);

/// Brute-force oracle: fixed-step classical RK4 on i hbar psi' = H psi from
/// the source state. Uses only the raw matrix. The step is at most
/// min(hbar / (200 ||H||_F), t / 100).
/// Throws Error{StepUnderflow} if that needs more than 1e9 steps.
double propagate_numeric(const MatrixRep &m, Overlap x, double t, double hbar);

/// Closed-form P on a uniform grid over [0, t_end] with n nodes.
/// Throws Error{InvalidArgument} unless n >= 2 and t_end > 0.
ProbabilityCurve sample_curve(const HamiltonianParams &p, Overlap x, double t_end, std::size_t n);

}  // namespace qsearch

#endif
