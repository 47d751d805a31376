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

#ifndef QSEARCH_CASES_H
#define QSEARCH_CASES_H

#include <array>
#include <optional>
#include <string_view>

#include "qsearch/hamiltonian.h"

namespace qsearch {

enum class CaseLabel { General, Case1, Case2, Case3, Case4, Case5, Case6, Case7 };

inline constexpr std::array<CaseLabel, 8> kAllCases = {
    CaseLabel::General, CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3,
    CaseLabel::Case4,   CaseLabel::Case5, CaseLabel::Case6, CaseLabel::Case7,
};

/// Absolute tolerance for the equality and realness tests in classify().
inline constexpr double kClassifyTol = 1e-12;

std::string_view to_string(CaseLabel label);
std::optional<CaseLabel> parse_case_label(std::string_view name);

/// Checked from most to least constrained:
/// Case1 > Case3 > Case5 > Case4 > Case6 > Case2 > Case7 > General.
/// The zero Hamiltonian is Case1.
CaseLabel classify(const HamiltonianParams &p);

/// The specialised peak-probability formula for `label`.
/// Throws Error{LabelMismatch} unless classify(p) == label.
double case_p_max(CaseLabel label, const HamiltonianParams &p, Overlap x);

/// The specialised peak-time formula for `label`; nullopt when the gap vanishes.
/// Throws Error{LabelMismatch} unless classify(p) == label.
std::optional<double> case_t_star(CaseLabel label, const HamiltonianParams &p, Overlap x);

/// Second-order expansion of the Case2/Case7 peak in eps = alpha - delta:
///     1 - (1 - x^2) eps^2 / (4 g^2),   g = alpha x + beta (beta = 0 for Case2).
/// alpha == delta is allowed as the expansion point. Throws Error{LabelMismatch}
/// for other labels, or when beta violates the label (Case2: zero,
/// Case7: real and nonzero).
double perturbative_p_max(CaseLabel label, const HamiltonianParams &p, Overlap x);

/// Second-order expansion of the Case2/Case7 peak time,
///     [1/g + eps x / (2 g^2) + (3x^2 - 1) eps^2 / (8 g^3)] * pi hbar / (2E),
/// which collapses to t*_H1 (Case2) or t*_H5 (Case7) at eps = 0.
double perturbative_t_star(CaseLabel label, const HamiltonianParams &p, Overlap x);

/// Limit of the general peak formula as x -> 0:
/// 4|beta|^2 / ((alpha - delta)^2 + 4|beta|^2), and 1 in the 0/0 case.
double p_max_x_zero_limit(const HamiltonianParams &p);

/// Fenner's Hamiltonian: alpha = delta = 0, beta = 2 i x.
HamiltonianParams fenner_params(double energy, Overlap x, double planck = 1.0);

/// True when 0 <= delta / (1 - 4x^2) <= alpha. For x < 1/2 this guarantees
/// t*_H1(alpha) >= t*_H2(alpha, delta).
bool h2_not_slower_than_h1(double alpha, double delta, Overlap x);

}  // namespace qsearch

#endif
