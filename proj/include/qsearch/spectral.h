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

#ifndef QSEARCH_SPECTRAL_H
#define QSEARCH_SPECTRAL_H

#include <optional>

#include "qsearch/hamiltonian.h"

namespace qsearch {

/// Off-diagonal magnitudes at or below this are treated as exactly zero.
inline constexpr double kOffDiagonalFloor = 1e-300;

struct Eigenvalues {
    double minus = 0.0;
    double plus = 0.0;
};

/// Coefficients of the unnormalized eigenvectors (A, 1) for lambda_minus and
/// (B, 1) for lambda_plus.
struct EigenCoeffs {
    cplx a{0.0, 0.0};
    cplx b{0.0, 0.0};
};

struct Spectrum {
    double lambda_minus = 0.0;
    double lambda_plus = 0.0;
    double gap_a = 0.0;
    /// Absent when h21 == 0; the matrix is then already diagonal.
    std::optional<EigenCoeffs> coeffs;

    double mean() const {
        return 0.5 * (lambda_minus + lambda_plus);
    }
};

/// (h11 - h22)^2 + 4 h12 h21, clamped at zero. Requires a Hermitian matrix.
double gap_radicand(const MatrixRep &m);

Eigenvalues eigenvalues(const MatrixRep &m);

/// Half the eigenvalue splitting.
double gap_parameter(const MatrixRep &m);

/// Throws Error{DegenerateOffDiagonal} when |h21| <= kOffDiagonalFloor.
EigenCoeffs eigen_coeffs(const MatrixRep &m);

/// Max-entry |M diag(lambda-, lambda+) M^-1 - m| with M = [[A, B], [1, 1]].
/// Throws Error{DegenerateOffDiagonal} when |h21| <= kOffDiagonalFloor.
double reconstruction_residual(const MatrixRep &m);

Spectrum spectrum(const MatrixRep &m);

}  // namespace qsearch

#endif
