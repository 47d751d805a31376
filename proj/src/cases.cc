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

#include "qsearch/cases.h"

#include <cmath>
#include <string>

#include "qsearch/dynamics.h"
#include "qsearch/error.h"

namespace qsearch {

namespace {

bool near_zero(double v) {
    return std::abs(v) <= kClassifyTol;
}

void require_label(CaseLabel label, const HamiltonianParams &p) {
    CaseLabel actual = classify(p);
    if (actual != label) {
        throw Error(ErrorCode::LabelMismatch, "parameters classify as " + std::string(to_string(actual)) +
                                                  ", not " + std::string(to_string(label)) + ".");
    }
}

/// pi hbar / (2E), the common prefactor of every peak time.
double time_unit(const HamiltonianParams &p) {
    return kPi * p.hbar() / (2.0 * p.energy);
}

std::optional<double> from_radicand(double radicand, const HamiltonianParams &p) {
    if (!(radicand > 0.0)) {
        return std::nullopt;
    }
    return 2.0 / std::sqrt(radicand) * time_unit(p);
}

std::optional<double> from_rate(double rate, const HamiltonianParams &p) {
    if (rate == 0.0) {
        return std::nullopt;
    }
    return time_unit(p) / std::abs(rate);
}

/// Squared gap in units of E^2 / 4, i.e. 4 a^2 / E^2, for the general family.
double general_radicand(const HamiltonianParams &p, double x) {
    double re = p.beta.real();
    double b2 = std::norm(p.beta);
    double diff = p.alpha - p.delta;
    return 4.0 * (p.alpha * p.delta + re * re - b2) * x * x + 4.0 * re * (p.alpha + p.delta) * x + diff * diff +
           4.0 * b2;
}

}  // namespace

std::string_view to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::General:
            return "General";
        case CaseLabel::Case1:
            return "Case1";
        case CaseLabel::Case2:
            return "Case2";
        case CaseLabel::Case3:
            return "Case3";
        case CaseLabel::Case4:
            return "Case4";
        case CaseLabel::Case5:
            return "Case5";
        case CaseLabel::Case6:
            return "Case6";
        case CaseLabel::Case7:
            return "Case7";
    }
    return "Unknown";
}

std::optional<CaseLabel> parse_case_label(std::string_view name) {
    for (CaseLabel label : kAllCases) {
        if (to_string(label) == name) {
            return label;
        }
    }
    return std::nullopt;
}

CaseLabel classify(const HamiltonianParams &p) {
    bool symmetric = near_zero(p.alpha - p.delta);
    bool diag_zero = near_zero(p.alpha) && near_zero(p.delta);
    bool beta_zero = std::abs(p.beta) <= kClassifyTol;
    bool beta_real = near_zero(p.beta.imag());

    if (symmetric && beta_zero) {
        return CaseLabel::Case1;
    }
    if (diag_zero && beta_real) {
        return CaseLabel::Case3;
    }
    if (symmetric && beta_real) {
        return CaseLabel::Case5;
    }
    if (diag_zero) {
        return CaseLabel::Case4;
    }
    if (symmetric) {
        return CaseLabel::Case6;
    }
    if (beta_zero) {
        return CaseLabel::Case2;
    }
    if (beta_real) {
        return CaseLabel::Case7;
    }
    return CaseLabel::General;
}

double case_p_max(CaseLabel label, const HamiltonianParams &p, Overlap x) {
    require_label(label, p);
    double xv = x.value();
    double x2 = xv * xv;
    double one_minus_x2 = (1.0 - xv) * (1.0 + xv);
    if (!(general_radicand(p, xv) > 0.0)) {
        return x2;
    }
    double alpha = p.alpha;
    double delta = p.delta;
    double re = p.beta.real();
    double b2 = std::norm(p.beta);

    switch (label) {
        case CaseLabel::Case1:
        case CaseLabel::Case3:
        case CaseLabel::Case5:
            return 1.0;
        case CaseLabel::Case2: {
            double sum = alpha + delta;
            double diff = alpha - delta;
            // 4 x^2 alpha delta + (alpha - delta)^2, written without cancellation.
            return sum * sum * x2 / (sum * sum * x2 + diff * diff * one_minus_x2);
        }
        case CaseLabel::Case4: {
            double num = 8.0 * re * re * x2 - 4.0 * re * re * x2 * x2 + 4.0 * b2 * one_minus_x2 * one_minus_x2;
            double den = 4.0 * re * re * x2 + 4.0 * b2 * one_minus_x2;
            return num / den;
        }
        case CaseLabel::Case6: {
            double lead = 2.0 * re * xv + 2.0 * alpha * x2;
            cplx top = lead * xv + 2.0 * (alpha * xv + p.beta) * one_minus_x2;
            double den = lead * lead + 4.0 * one_minus_x2 * std::norm(alpha * xv + p.beta);
            return std::norm(top) / den;
        }
        case CaseLabel::Case7: {
            double top = (alpha + delta) * xv + 2.0 * re;
            double diff = alpha - delta;
            double den = 4.0 * (alpha * xv + re) * (delta * xv + re) + diff * diff;
            return top * top / den;
        }
        case CaseLabel::General:
            return p_max(p, x);
    }
    return p_max(p, x);
}

std::optional<double> case_t_star(CaseLabel label, const HamiltonianParams &p, Overlap x) {
    require_label(label, p);
    double xv = x.value();
    double x2 = xv * xv;
    double one_minus_x2 = (1.0 - xv) * (1.0 + xv);
    double alpha = p.alpha;
    double delta = p.delta;
    double re = p.beta.real();
    double b2 = std::norm(p.beta);

    switch (label) {
        case CaseLabel::Case1:
            return from_rate(alpha * xv, p);
        case CaseLabel::Case2: {
            double sum = alpha + delta;
            double diff = alpha - delta;
            return from_radicand(sum * sum * x2 + diff * diff * one_minus_x2, p);
        }
        case CaseLabel::Case3:
            return from_rate(re, p);
        case CaseLabel::Case4:
            return from_radicand(4.0 * re * re * x2 + 4.0 * b2 * one_minus_x2, p);
        case CaseLabel::Case5:
            return from_rate(alpha * xv + re, p);
        case CaseLabel::Case6: {
            double lead = 2.0 * re * xv + 2.0 * alpha * x2;
            return from_radicand(lead * lead + 4.0 * one_minus_x2 * std::norm(alpha * xv + p.beta), p);
        }
        case CaseLabel::Case7: {
            double diff = alpha - delta;
            return from_radicand(4.0 * (alpha * xv + re) * (delta * xv + re) + diff * diff, p);
        }
        case CaseLabel::General:
            return from_radicand(general_radicand(p, xv), p);
    }
    return std::nullopt;
}

namespace {

/// g = alpha x + beta for the perturbative families, after checking the label.
double perturbative_pivot(CaseLabel label, const HamiltonianParams &p, Overlap x) {
    bool ok = false;
    if (label == CaseLabel::Case2) {
        ok = std::abs(p.beta) <= kClassifyTol;
    } else if (label == CaseLabel::Case7) {
        ok = near_zero(p.beta.imag()) && std::abs(p.beta) > kClassifyTol;
    }
    if (!ok) {
        throw Error(ErrorCode::LabelMismatch,
                    "perturbative expansions exist for Case2 (beta = 0) and Case7 (beta real, nonzero) only; got " +
                        std::string(to_string(label)) + ".");
    }
    double g = p.alpha * x.value() + (label == CaseLabel::Case7 ? p.beta.real() : 0.0);
    if (g == 0.0) {
        throw Error(ErrorCode::InvalidArgument, "expansion pivot alpha x + beta is zero.");
    }
    return g;
}

}  // namespace

double perturbative_p_max(CaseLabel label, const HamiltonianParams &p, Overlap x) {
    double g = perturbative_pivot(label, p, x);
    double eps = p.alpha - p.delta;
    double one_minus_x2 = (1.0 - x.value()) * (1.0 + x.value());
    return 1.0 - 0.25 * one_minus_x2 * eps * eps / (g * g);
}

double perturbative_t_star(CaseLabel label, const HamiltonianParams &p, Overlap x) {
    double g = perturbative_pivot(label, p, x);
    double eps = p.alpha - p.delta;
    double xv = x.value();
    double bracket = 1.0 / g + eps * xv / (2.0 * g * g) + (3.0 * xv * xv - 1.0) * eps * eps / (8.0 * g * g * g);
    return bracket * time_unit(p);
}

double p_max_x_zero_limit(const HamiltonianParams &p) {
    double diff = p.alpha - p.delta;
    double b4 = 4.0 * std::norm(p.beta);
    double den = diff * diff + b4;
    if (den == 0.0) {
        return 1.0;
    }
    return b4 / den;
}

HamiltonianParams fenner_params(double energy, Overlap x, double planck) {
    RawParams raw;
    raw.beta = cplx(0.0, 2.0 * x.value());
    raw.energy = energy;
    raw.planck = planck;
    return validate_params(raw);
}

bool h2_not_slower_than_h1(double alpha, double delta, Overlap x) {
    double k = 1.0 - 4.0 * x.squared();
    if (!(k > 0.0)) {
        return false;
    }
    double q = delta / k;
    return q >= 0.0 && q <= alpha;
}

}  // namespace qsearch
