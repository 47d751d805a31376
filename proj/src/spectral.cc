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

#include "qsearch/spectral.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "qsearch/error.h"

namespace qsearch {

namespace {

void require_hermitian(const MatrixRep &m) {
    if (!m.is_hermitian()) {
        throw Error(ErrorCode::NonHermitian, "matrix representation has h21 != conj(h12).");
    }
}

void require_off_diagonal(const MatrixRep &m) {
    if (std::abs(m.h21) <= kOffDiagonalFloor) {
        throw Error(ErrorCode::DegenerateOffDiagonal, "h21 == 0; the matrix is already diagonal.");
    }
}

using Mat2 = std::array<std::array<cplx, 2>, 2>;

Mat2 mul(const Mat2 &l, const Mat2 &r) {
    Mat2 out{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            out[i][j] = l[i][0] * r[0][j] + l[i][1] * r[1][j];
        }
    }
    return out;
}

}  // namespace

double gap_radicand(const MatrixRep &m) {
    require_hermitian(m);
    double d = m.diagonal_gap();
    // h12 h21 = |h12|^2 for Hermitian input; the real part drops rounding residue.
    return std::max(0.0, d * d + 4.0 * (m.h12 * m.h21).real());
}

double gap_parameter(const MatrixRep &m) {
    return 0.5 * std::sqrt(gap_radicand(m));
}

Eigenvalues eigenvalues(const MatrixRep &m) {
    double half_trace = 0.5 * (m.h11 + m.h22);
    double a = gap_parameter(m);
    return Eigenvalues{half_trace - a, half_trace + a};
}

EigenCoeffs eigen_coeffs(const MatrixRep &m) {
    require_off_diagonal(m);
    double d = m.diagonal_gap();
    double two_a = 2.0 * gap_parameter(m);
    // A = (d - 2a) / (2 h21), B = (d + 2a) / (2 h21). Whichever of the two
    // cancels is rewritten with (d - 2a)(d + 2a) = -4 h12 h21.
    if (d >= 0.0) {
        return EigenCoeffs{-2.0 * m.h12 / (d + two_a), (d + two_a) / (2.0 * m.h21)};
    }
    return EigenCoeffs{(d - two_a) / (2.0 * m.h21), 2.0 * m.h12 / (two_a - d)};
}

double reconstruction_residual(const MatrixRep &m) {
    EigenCoeffs c = eigen_coeffs(m);
    Eigenvalues ev = eigenvalues(m);
    cplx inv_det = 1.0 / (c.a - c.b);
    Mat2 vecs{{{c.a, c.b}, {1.0, 1.0}}};
    Mat2 diag{{{ev.minus, 0.0}, {0.0, ev.plus}}};
    Mat2 inv{{{inv_det, -c.b * inv_det}, {-inv_det, c.a * inv_det}}};
    Mat2 back = mul(mul(vecs, diag), inv);
    Mat2 orig{{{m.h11, m.h12}, {m.h21, m.h22}}};
    double worst = 0.0;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            worst = std::max(worst, std::abs(back[i][j] - orig[i][j]));
        }
    }
    return worst;
}

Spectrum spectrum(const MatrixRep &m) {
    Eigenvalues ev = eigenvalues(m);
    Spectrum s;
    s.lambda_minus = ev.minus;
    s.lambda_plus = ev.plus;
    s.gap_a = 0.5 * (ev.plus - ev.minus);
    if (std::abs(m.h21) > kOffDiagonalFloor) {
        s.coeffs = eigen_coeffs(m);
    }
    return s;
}

}  // namespace qsearch
