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

#include "qsearch/report.h"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <thread>

#include "qsearch/baselines.h"
#include "qsearch/cases.h"
#include "qsearch/dynamics.h"
#include "qsearch/error.h"
#include "qsearch/overlap_prior.h"
#include "qsearch/threshold.h"

namespace qsearch {

namespace {

HamiltonianParams make_params(double alpha, double delta, cplx beta) {
    RawParams raw;
    raw.alpha = alpha;
    raw.delta = delta;
    raw.beta = beta;
    return validate_params(raw);
}

/// Half-open uniform grid on [lo, hi): node i is lo + (hi - lo) i / n.
double grid_point(double lo, double hi, std::size_t i, std::size_t n) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
}

Cell time_cell(const std::optional<double> &t) {
    if (t) {
        return *t;
    }
    return std::string("none");
}

std::string cell_text(const Cell &c) {
    if (const double *d = std::get_if<double>(&c)) {
        return format_double(*d);
    }
    if (const std::int64_t *i = std::get_if<std::int64_t>(&c)) {
        return std::to_string(*i);
    }
    return std::get<std::string>(c);
}

/// Evaluates `count` rows through parallel_for and appends them in index order.
void add_rows_parallel(TableArtifact &table, std::size_t count,
                       const std::function<std::vector<Cell>(std::size_t)> &make_row) {
    std::vector<std::vector<Cell>> rows(count);
    parallel_for(count, worker_threads(), [&](std::size_t i) { rows[i] = make_row(i); });
    for (auto &row : rows) {
        table.add_row(std::move(row));
    }
}

}  // namespace

std::optional<TableFormat> parse_table_format(std::string_view name) {
    if (name == "csv") {
        return TableFormat::Csv;
    }
    if (name == "tsv") {
        return TableFormat::Tsv;
    }
    return std::nullopt;
}

void TableArtifact::add_row(std::vector<Cell> row) {
    if (row.size() != header.size()) {
        throw Error(ErrorCode::InvalidArgument, "row width " + std::to_string(row.size()) +
                                                    " does not match header width " + std::to_string(header.size()));
    }
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    if (v == 0.0) {
        v = 0.0;  // drop the sign of negative zero
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

std::string render(const TableArtifact &table, TableFormat format) {
    char delim = format == TableFormat::Csv ? ',' : '\t';
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); i++) {
        if (i) {
            out += delim;
        }
        out += table.header[i];
    }
    out += '\n';
    for (const auto &c : table.comments) {
        out += "# ";
        out += c;
        out += '\n';
    }
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); i++) {
            if (i) {
                out += delim;
            }
            out += cell_text(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::size_t worker_threads() {
    const char *raw = std::getenv(kThreadsEnvVar);
    if (raw == nullptr) {
        return 1;
    }
    char *end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) {
        return 1;
    }
    return static_cast<std::size_t>(std::min(v, 256L));
}

void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)> &fn) {
    workers = std::max<std::size_t>(1, std::min(workers, n));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; i++) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    for (std::size_t w = 0; w < workers; w++) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) {
                    fn(i);
                }
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    for (auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
}

TableArtifact emit_table1() {
    struct Row {
        CaseLabel label;
        double alpha;
        double delta;
        cplx beta;
    };
    const std::vector<Row> reps = {
        {CaseLabel::General, 1.0, 2.0, {1.0, 1.0}}, {CaseLabel::Case1, 1.0, 1.0, {0.0, 0.0}},
        {CaseLabel::Case2, 1.0, 0.5, {0.0, 0.0}},   {CaseLabel::Case3, 0.0, 0.0, {0.5, 0.0}},
        {CaseLabel::Case4, 0.0, 0.0, {0.5, 0.5}},   {CaseLabel::Case5, 1.0, 1.0, {1.0, 0.0}},
        {CaseLabel::Case6, 1.0, 1.0, {1.0, 1.0}},   {CaseLabel::Case7, 1.0, 0.5, {1.0, 0.0}},
    };
    Overlap x(0.5);

    TableArtifact table;
    table.comments = {
        "table1: peak probability and peak time per Hamiltonian family, x=0.5, E=1, h=1",
        "p_max_case/t_star_case: specialised formula; p_max_general/t_star_general: general formula",
        "p_max_exact/t_star_exact: exact supremum of P(t) and first time it is reached",
    };
    table.header = {"case",          "alpha",          "delta",       "beta_re",      "beta_im",
                    "x",             "p_max_case",     "p_max_general", "p_max_exact", "t_star_case",
                    "t_star_general", "t_star_exact"};
    add_rows_parallel(table, reps.size(), [&](std::size_t i) {
        const Row &r = reps[i];
        HamiltonianParams p = make_params(r.alpha, r.delta, r.beta);
        SearchOutcome exact = search_outcome(p, x);
        return std::vector<Cell>{std::string(to_string(r.label)),
                                 r.alpha,
                                 r.delta,
                                 r.beta.real(),
                                 r.beta.imag(),
                                 x.value(),
                                 case_p_max(r.label, p, x),
                                 p_max(p, x),
                                 exact.p_max,
                                 time_cell(case_t_star(r.label, p, x)),
                                 time_cell(t_star(p, x)),
                                 time_cell(exact.t_star)};
    });
    return table;
}

TableArtifact emit_table2() {
    struct Row {
        const char *name;
        CaseLabel label;
        double alpha;
        double beta;
    };
    const std::vector<Row> reps = {
        {"H1", CaseLabel::Case1, 1.0, 0.0},
        {"H3", CaseLabel::Case3, 0.0, 1.0},
        {"H5", CaseLabel::Case5, 1.0, 1.0},
    };
    Overlap x(0.5);

    TableArtifact table;
    table.comments = {"table2: unit-probability Hamiltonians, alpha=delta, beta real, x=0.5, E=1, h=1"};
    table.header = {"hamiltonian", "alpha", "delta", "beta", "x", "p_max", "t_star"};
    for (const Row &r : reps) {
        HamiltonianParams p = make_params(r.alpha, r.alpha, {r.beta, 0.0});
        table.add_row({std::string(r.name), r.alpha, r.alpha, r.beta, x.value(), case_p_max(r.label, p, x),
                       time_cell(case_t_star(r.label, p, x))});
    }
    return table;
}

TableArtifact emit_table3() {
    const std::vector<std::uint64_t> dims = {4, 8, 16};
    const std::vector<double> variances = {0.1, 1.0, 10.0};
    const double mu = 3.0 * kPi / 8.0;
    OverlapBound bound(std::cos(kPi / 8.0));

    TableArtifact table;
    table.comments = {
        "table3: Prob(x >= x_bar) with x_bar=cos(pi/8), mu_theta=3pi/8",
        "prob_uniform: uniform target on the sphere; prob_nonuniform: Gaussian-times-knee prior",
    };
    table.header = {"N", "sigma_sq", "prob_uniform", "prob_nonuniform"};
    add_rows_parallel(table, dims.size() * variances.size(), [&](std::size_t i) {
        std::uint64_t n = dims[i / variances.size()];
        double s2 = variances[i % variances.size()];
        PriorSpec spec{n, mu, s2};
        return std::vector<Cell>{static_cast<std::int64_t>(n), s2, uniform_prob_overlap(bound, n),
                                 prob_overlap_at_least(bound, spec)};
    });
    return table;
}

namespace {

TableArtifact figure_table() {
    TableArtifact table;
    table.header = {"block", "series", "abscissa", "value"};
    return table;
}

/// One block: for each series, kFigureSamples points of value(series, abscissa).
void add_block(TableArtifact &table, const std::string &block, const std::vector<std::string> &series,
               double lo, double hi, const std::function<double(std::size_t, double)> &value) {
    const std::size_t n = kFigureSamples;
    add_rows_parallel(table, series.size() * n, [&](std::size_t i) {
        std::size_t s = i / n;
        double t = grid_point(lo, hi, i % n, n);
        return std::vector<Cell>{block, series[s], t, value(s, t)};
    });
}

TableArtifact fig4() {
    TableArtifact table = figure_table();
    table.comments = {
        "fig4: peak probability in the x -> 0 limit, 4|beta|^2 / ((alpha-delta)^2 + 4|beta|^2)",
        "block pmax_vs_asymmetry: abscissa alpha-delta in [-2, 2), step 0.01",
        "block pmax_vs_abs_beta: abscissa |beta| in [0, 2), step 0.005",
    };
    const std::vector<double> betas = {0.25, 0.5, 1.0};
    const std::vector<double> asyms = {0.0, 0.25, 0.5};
    add_block(table, "pmax_vs_asymmetry", {"abs_beta=0.25", "abs_beta=0.5", "abs_beta=1"}, -2.0, 2.0,
              [&](std::size_t s, double diff) { return p_max_x_zero_limit(make_params(diff, 0.0, {betas[s], 0.0})); });
    add_block(table, "pmax_vs_abs_beta", {"asymmetry=0", "asymmetry=0.25", "asymmetry=0.5"}, 0.0, 2.0,
              [&](std::size_t s, double b) { return p_max_x_zero_limit(make_params(asyms[s], 0.0, {b, 0.0})); });
    return table;
}

TableArtifact fig5() {
    TableArtifact table = figure_table();
    table.comments = {
        "fig5: alpha=beta=1, E=1, h=1",
        "block tstar_vs_x: abscissa x on (0, 1), x_i = (i+1)/401",
        "block p_vs_t: abscissa t in [0, 0.6), step 0.0015, x=0.5",
    };
    struct Family {
        CaseLabel label;
        HamiltonianParams params;
    };
    const std::vector<Family> fam = {
        {CaseLabel::Case1, make_params(1.0, 1.0, {0.0, 0.0})},
        {CaseLabel::Case3, make_params(0.0, 0.0, {1.0, 0.0})},
        {CaseLabel::Case5, make_params(1.0, 1.0, {1.0, 0.0})},
    };
    const std::vector<std::string> names = {"H1", "H3", "H5"};

    const std::size_t n = kFigureSamples;
    add_rows_parallel(table, fam.size() * n, [&](std::size_t i) {
        std::size_t s = i / n;
        double xv = static_cast<double>(i % n + 1) / static_cast<double>(n + 1);
        Cell t = time_cell(case_t_star(fam[s].label, fam[s].params, Overlap(xv)));
        return std::vector<Cell>{std::string("tstar_vs_x"), names[s], xv, t};
    });
    Overlap x(0.5);
    add_block(table, "p_vs_t", names, 0.0, 0.6, [&](std::size_t s, double t) {
        return transition_probability(matrix_rep(fam[s].params, x), x, t, fam[s].params.hbar());
    });
    return table;
}

TableArtifact fig6() {
    const HamiltonianParams general = make_params(0.5, 1.0, {1.0, 0.0});
    const HamiltonianParams h5 = make_params(0.5, 0.5, {1.0, 0.0});
    const double thr = 0.95;
    Overlap x(0.5);
    ThresholdResult hit_general = time_to_threshold(general, x, thr);
    ThresholdResult hit_h5 = time_to_threshold(h5, x, thr);

    TableArtifact table = figure_table();
    table.comments = {
        "fig6: H alpha=0.5 delta=1 beta=1; H5 alpha=delta=0.5 beta=1; x=0.5, E=1, h=1",
        "block p_vs_t: abscissa t in [0, 0.4), step 0.001; series threshold is the constant 0.95",
        "H: p_max=" + format_double(hit_general.p_max) + " t_hit=" + format_double(hit_general.t_hit.value_or(-1.0)),
        "H5: p_max=" + format_double(hit_h5.p_max) + " t_hit=" + format_double(hit_h5.t_hit.value_or(-1.0)),
    };
    add_block(table, "p_vs_t", {"H", "H5", "threshold"}, 0.0, 0.4, [&](std::size_t s, double t) {
        if (s == 2) {
            return thr;
        }
        const HamiltonianParams &p = s == 0 ? general : h5;
        return transition_probability(matrix_rep(p, x), x, t, p.hbar());
    });
    return table;
}

}  // namespace

TableArtifact emit_fig_data(FigureId which) {
    switch (which) {
        case FigureId::Fig4:
            return fig4();
        case FigureId::Fig5:
            return fig5();
        case FigureId::Fig6:
            return fig6();
    }
    throw Error(ErrorCode::InvalidArgument, "unknown figure");
}

}  // namespace qsearch
