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

#ifndef QSEARCH_HAMILTONIAN_H
#define QSEARCH_HAMILTONIAN_H

#include <complex>
#include <optional>

namespace qsearch {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Unvalidated input, as it arrives from a caller or the command line.
///
/// `gamma` is optional. When present it is only compared against conj(beta);
/// it never becomes an independent coefficient.
struct RawParams {
    double alpha = 0.0;
    double delta = 0.0;
    cplx beta{0.0, 0.0};
    std::optional<cplx> gamma;
    double energy = 1.0;
    double planck = 1.0;
};

/// Coefficients of H = E[alpha |w><w| + beta |w><s| + conj(beta) |s><w| + delta |s><s|].
///
/// Obtain instances through validate_params(); functions that accept a
/// HamiltonianParams assume it has been validated.
struct HamiltonianParams {
    double alpha = 0.0;
    double delta = 0.0;
    cplx beta{0.0, 0.0};
    double energy = 1.0;
    double planck = 1.0;

    cplx gamma() const {
        return std::conj(beta);
    }
    double hbar() const {
        return planck / (2.0 * kPi);
    }
};

/// Throws Error{NonFinite, NonPositiveScale, NonHermitian}.
HamiltonianParams validate_params(const RawParams &raw);

/// Real overlap <w|s>, strictly inside (0, 1).
class Overlap {
   public:
    /// Throws Error{InvalidOverlap} outside the open unit interval.
    explicit Overlap(double x);

    double value() const noexcept {
        return x_;
    }
    double squared() const noexcept {
        return x_ * x_;
    }
    /// sqrt(1 - x^2), the |psi_r> component of the source state.
    double complement() const noexcept;

   private:
    double x_;
};

/// The Hamiltonian restricted to span{|w>, |r>} (Gram-Schmidt basis).
struct MatrixRep {
    double h11 = 0.0;
    cplx h12{0.0, 0.0};
    cplx h21{0.0, 0.0};
    double h22 = 0.0;

    double diagonal_gap() const {
        return h11 - h22;
    }
    /// Frobenius norm.
    double norm() const;
    /// |h21 - conj(h12)| within `tol` times max(1, norm()).
    bool is_hermitian(double tol = 1e-12) const;
};

/// Components of a state in the {|w>, |r>} basis.
struct StateVec {
    cplx c_w{0.0, 0.0};
    cplx c_r{0.0, 0.0};

    double norm_sq() const {
        return std::norm(c_w) + std::norm(c_r);
    }
};

MatrixRep matrix_rep(const HamiltonianParams &p, Overlap x);

StateVec source_state(Overlap x);

}  // namespace qsearch

#endif
