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

#include "qsearch/hamiltonian.h"

#include <cmath>
#include <string>

#include "qsearch/error.h"

namespace qsearch {

namespace {

bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

HamiltonianParams validate_params(const RawParams &raw) {
    if (!std::isfinite(raw.alpha) || !std::isfinite(raw.delta) || !finite(raw.beta) ||
        !std::isfinite(raw.energy) || !std::isfinite(raw.planck) || (raw.gamma && !finite(*raw.gamma))) {
        throw Error(ErrorCode::NonFinite, "Hamiltonian coefficients must be finite.");
    }
    if (raw.energy <= 0.0) {
        throw Error(ErrorCode::NonPositiveScale, "energy scale E must be positive, got " + std::to_string(raw.energy));
    }
    if (raw.planck <= 0.0) {
        throw Error(ErrorCode::NonPositiveScale, "Planck constant h must be positive, got " + std::to_string(raw.planck));
    }
    if (raw.gamma && std::abs(*raw.gamma - std::conj(raw.beta)) > 1e-12) {
        throw Error(ErrorCode::NonHermitian, "gamma must equal conj(beta).");
    }
    return HamiltonianParams{raw.alpha, raw.delta, raw.beta, raw.energy, raw.planck};
}

Overlap::Overlap(double x) : x_(x) {
    if (!(x > 0.0 && x < 1.0)) {
        throw Error(ErrorCode::InvalidOverlap, "overlap x must lie strictly inside (0, 1), got " + std::to_string(x));
    }
}

double Overlap::complement() const noexcept {
    // (1 - x)(1 + x) keeps precision as x -> 1.
    return std::sqrt((1.0 - x_) * (1.0 + x_));
}

double MatrixRep::norm() const {
    return std::sqrt(h11 * h11 + std::norm(h12) + std::norm(h21) + h22 * h22);
}

bool MatrixRep::is_hermitian(double tol) const {
    double scale = std::max(1.0, norm());
    return std::abs(h21 - std::conj(h12)) <= tol * scale;
}

MatrixRep matrix_rep(const HamiltonianParams &p, Overlap x) {
    double xv = x.value();
    double s = x.complement();
    double e = p.energy;
    MatrixRep m;
    m.h11 = e * (p.alpha + 2.0 * p.beta.real() * xv + p.delta * xv * xv);
    m.h12 = e * s * (p.beta + p.delta * xv);
    m.h21 = e * s * (std::conj(p.beta) + p.delta * xv);
    m.h22 = e * p.delta * s * s;
    return m;
}

StateVec source_state(Overlap x) {
    return StateVec{cplx(x.value(), 0.0), cplx(x.complement(), 0.0)};
}

}  // namespace qsearch
