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

#include "qsearch/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>

#include "qsearch/baselines.h"
#include "qsearch/cases.h"
#include "qsearch/dynamics.h"
#include "qsearch/error.h"
#include "qsearch/overlap_prior.h"
#include "qsearch/report.h"
#include "qsearch/threshold.h"

namespace qsearch::cli {

namespace {

std::string scalar(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct HamiltonianFlags {
    double alpha = 0.0;
    double delta = 0.0;
    double beta_re = 0.0;
    double beta_im = 0.0;
    std::optional<double> gamma_re;
    std::optional<double> gamma_im;
    double energy = 1.0;
    double planck = 1.0;
    double x = 0.5;
};

struct OutputFlags {
    std::string out;
    std::string format = "csv";
};

void add_hamiltonian_flags(CLI::App *sub, HamiltonianFlags &f) {
    sub->add_option("--alpha", f.alpha, "coefficient of |w><w|");
    sub->add_option("--delta", f.delta, "coefficient of |s><s|");
    sub->add_option("--beta-re", f.beta_re, "real part of the |w><s| coefficient");
    sub->add_option("--beta-im", f.beta_im, "imaginary part of the |w><s| coefficient");
    sub->add_option("--gamma-re", f.gamma_re, "real part of the |s><w| coefficient (Hermiticity check only)");
    sub->add_option("--gamma-im", f.gamma_im, "imaginary part of the |s><w| coefficient (Hermiticity check only)");
    sub->add_option("--energy", f.energy, "energy scale E");
    sub->add_option("--planck", f.planck, "Planck constant h");
    sub->add_option("--x", f.x, "overlap <w|s> in (0, 1)");
}

void add_output_flags(CLI::App *sub, OutputFlags &f) {
    sub->add_option("--out", f.out, "write the table to this path instead of stdout");
    sub->add_option("--format", f.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));
}

RunConfig make_config(const HamiltonianFlags &f, const OutputFlags *o = nullptr) {
    RawParams raw;
    raw.alpha = f.alpha;
    raw.delta = f.delta;
    raw.beta = {f.beta_re, f.beta_im};
    if (f.gamma_re || f.gamma_im) {
        raw.gamma = cplx{f.gamma_re.value_or(0.0), f.gamma_im.value_or(0.0)};
    }
    raw.energy = f.energy;
    raw.planck = f.planck;
    RunConfig cfg{validate_params(raw), Overlap(f.x), std::nullopt, "", TableFormat::Csv};
    if (o != nullptr) {
        cfg.output_path = o->out;
        cfg.format = parse_table_format(o->format).value_or(TableFormat::Csv);
    }
    return cfg;
}

void write_table(const TableArtifact &table, const OutputFlags &o, std::ostream &out) {
    std::string text = render(table, parse_table_format(o.format).value_or(TableFormat::Csv));
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw Error(ErrorCode::InvalidArgument, "cannot open output file: " + o.out);
    }
    file << text;
    if (!file) {
        throw Error(ErrorCode::InvalidArgument, "failed writing output file: " + o.out);
    }
}

int exit_code_for(const Error &e) {
    return e.code() == ErrorCode::QuadratureFailure ? kExitQuadrature : kExitValidation;
}

/// Replaces `--config FILE` with the file's `key = value` items, spliced in
/// directly after the subcommand so later command-line flags win.
std::vector<std::string> expand_config(std::vector<std::string> argv) {
    std::optional<std::string> path;
    for (std::size_t i = 1; i < argv.size(); i++) {
        if (argv[i] == "--config" && i + 1 < argv.size()) {
            path = argv[i + 1];
            argv.erase(argv.begin() + i, argv.begin() + i + 2);
            i--;
        } else if (argv[i].rfind("--config=", 0) == 0) {
            path = argv[i].substr(9);
            argv.erase(argv.begin() + i);
            i--;
        }
    }
    if (!path || argv.empty()) {
        return argv;
    }
    std::ifstream file(*path);
    if (!file) {
        throw CLI::FileError::Missing(*path);
    }
    std::vector<std::string> injected;
    for (const CLI::ConfigItem &item : CLI::ConfigINI().from_config(file)) {
        if (!item.parents.empty() || item.inputs.size() != 1) {
            throw CLI::ConversionError("config file must contain only plain `key = value` lines");
        }
        injected.push_back("--" + item.name + "=" + item.inputs.front());
    }
    argv.insert(argv.begin() + 1, injected.begin(), injected.end());
    return argv;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Continuous-time quantum search on the two-level effective Hamiltonian", "qsearch"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    HamiltonianFlags ham;
    OutputFlags output;
    double t = 0.0;
    double p_thr = 0.0;
    double t_end = 1.0;
    std::size_t n_points = kFigureSamples;
    bool exact = false;
    bool oracle = false;
    std::uint64_t n_items = 0;
    std::optional<std::uint64_t> k_steps;
    double x_bar = 0.0;
    std::uint64_t dim = 0;
    double mu = 3.0 * kPi / 8.0;
    double sigma_sq = 1.0;
    bool uniform = false;

    std::function<int()> action;
    auto subcommand = [&](const char *name, const char *help, std::function<int()> fn) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("--config", "read `key = value` defaults from a file; flags take precedence");
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };

    CLI::App *eval = subcommand("eval", "transition probability P(t)", [&] {
        RunConfig cfg = make_config(ham);
        double v = oracle ? propagate_numeric(matrix_rep(cfg.params, cfg.x), cfg.x, t, cfg.params.hbar())
                          : transition_probability(matrix_rep(cfg.params, cfg.x), cfg.x, t, cfg.params.hbar());
        out << scalar(v) << '\n';
        return kExitOk;
    });
    add_hamiltonian_flags(eval, ham);
    eval->add_option("--t", t, "time")->required();
    eval->add_flag("--oracle", oracle, "use the numerical propagator instead of the closed form");

    CLI::App *pmax = subcommand("pmax", "peak success probability", [&] {
        RunConfig cfg = make_config(ham);
        double v = exact ? search_outcome(cfg.params, cfg.x).p_max
                         : case_p_max(classify(cfg.params), cfg.params, cfg.x);
        out << scalar(v) << '\n';
        return kExitOk;
    });
    add_hamiltonian_flags(pmax, ham);
    pmax->add_flag("--exact", exact, "report the exact supremum of P(t)");

    CLI::App *tstar = subcommand("tstar", "time of the peak success probability", [&] {
        RunConfig cfg = make_config(ham);
        std::optional<double> v =
            exact ? search_outcome(cfg.params, cfg.x).t_star : case_t_star(classify(cfg.params), cfg.params, cfg.x);
        out << (v ? scalar(*v) : std::string("none")) << '\n';
        return kExitOk;
    });
    add_hamiltonian_flags(tstar, ham);
    tstar->add_flag("--exact", exact, "report the first time the exact supremum is reached");

    CLI::App *threshold = subcommand("threshold", "first time P(t) reaches a threshold", [&] {
        RunConfig cfg = make_config(ham);
        cfg.threshold = p_thr;
        ThresholdResult r = time_to_threshold(cfg.params, cfg.x, *cfg.threshold);
        if (!r.reachable) {
            err << "threshold " << scalar(p_thr) << " is unreachable; peak probability is " << scalar(r.p_max)
                << '\n';
            return kExitUnreachable;
        }
        out << scalar(*r.t_hit) << '\n';
        return kExitOk;
    });
    add_hamiltonian_flags(threshold, ham);
    threshold->add_option("--p", p_thr, "threshold probability in [0, 1]")->required();

    CLI::App *classify_cmd = subcommand("classify", "family label of the parameters", [&] {
        RunConfig cfg = make_config(ham);
        out << to_string(classify(cfg.params)) << '\n';
        return kExitOk;
    });
    add_hamiltonian_flags(classify_cmd, ham);

    CLI::App *curve = subcommand("curve", "P(t) sampled on a uniform grid", [&] {
        RunConfig cfg = make_config(ham, &output);
        ProbabilityCurve c = sample_curve(cfg.params, cfg.x, t_end, n_points);
        TableArtifact table;
        table.header = {"t", "p"};
        table.comments = {"alpha=" + format_double(cfg.params.alpha) + " delta=" + format_double(cfg.params.delta) +
                          " beta=" + format_double(cfg.params.beta.real()) + "+" +
                          format_double(cfg.params.beta.imag()) + "i x=" + format_double(cfg.x.value()) +
                          " E=" + format_double(cfg.params.energy) + " h=" + format_double(cfg.params.planck)};
        for (std::size_t i = 0; i < c.times.size(); i++) {
            table.add_row({c.times[i], c.probs[i]});
        }
        write_table(table, output, out);
        return kExitOk;
    });
    add_hamiltonian_flags(curve, ham);
    add_output_flags(curve, output);
    curve->add_option("--t-end", t_end, "last sample time");
    curve->add_option("--n", n_points, "number of samples")->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));

    auto table_command = [&](const char *name, const char *help, std::function<TableArtifact()> make) {
        CLI::App *sub = subcommand(name, help, [&output, &out, make] {
            write_table(make(), output, out);
            return kExitOk;
        });
        add_output_flags(sub, output);
    };
    table_command("table1", "peak probability and time for each Hamiltonian family", emit_table1);
    table_command("table2", "the unit-probability Hamiltonians", emit_table2);
    table_command("table3", "overlap prior probabilities", emit_table3);
    table_command("fig4", "peak probability in the small-overlap limit", [] { return emit_fig_data(FigureId::Fig4); });
    table_command("fig5", "peak time versus overlap and P(t) curves", [] { return emit_fig_data(FigureId::Fig5); });
    table_command("fig6", "P(t) curves against a 0.95 threshold", [] { return emit_fig_data(FigureId::Fig6); });

    CLI::App *grover = subcommand("grover", "Grover success probability after k iterations", [&] {
        std::uint64_t k = k_steps ? *k_steps : grover_optimal_k(n_items);
        out << k << ' ' << scalar(grover_probability({k, n_items})) << '\n';
        return kExitOk;
    });
    grover->add_option("--n", n_items, "number of items")->required();
    grover->add_option("--k", k_steps, "iterations; defaults to the optimal count");

    CLI::App *fg = subcommand("fg", "success probability of the x-symmetric analog Hamiltonian", [&] {
        RawParams raw;
        raw.energy = ham.energy;
        raw.planck = ham.planck;
        HamiltonianParams p = validate_params(raw);
        if (!(t >= 0.0) || !std::isfinite(t)) {
            throw Error(ErrorCode::InvalidArgument, "time must be finite and non-negative");
        }
        out << scalar(farhi_gutmann_probability(t, Overlap(ham.x), p.energy, p.planck)) << '\n';
        return kExitOk;
    });
    fg->add_option("--t", t, "time")->required();
    fg->add_option("--x", ham.x, "overlap <w|s> in (0, 1)");
    fg->add_option("--energy", ham.energy, "energy scale E");
    fg->add_option("--planck", ham.planck, "Planck constant h");

    CLI::App *prior = subcommand("prior", "Prob(x >= x_bar) under a target prior", [&] {
        OverlapBound bound(x_bar);
        double v = uniform ? uniform_prob_overlap(bound, dim) : prob_overlap_at_least(bound, PriorSpec{dim, mu, sigma_sq});
        out << scalar(v) << '\n';
        return kExitOk;
    });
    prior->add_option("--xbar", x_bar, "overlap bound in [0, 1]")->required();
    prior->add_option("--n", dim, "Hilbert space dimension")->required();
    prior->add_option("--mu", mu, "prior centre in theta");
    prior->add_option("--sigma-sq", sigma_sq, "prior variance in theta");
    prior->add_flag("--uniform", uniform, "uniformly random target instead of the Gaussian prior");

    std::vector<std::string> argv(args.begin() + (args.empty() ? 0 : 1), args.end());
    try {
        argv = expand_config(std::move(argv));
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        return action ? action() : kExitValidation;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}

}  // namespace qsearch::cli
