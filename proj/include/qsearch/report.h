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

#ifndef QSEARCH_REPORT_H
#define QSEARCH_REPORT_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qsearch/hamiltonian.h"

namespace qsearch {

/// Name of the environment variable holding the sweep worker count.
inline constexpr const char *kThreadsEnvVar = "QSEARCH_THREADS";

/// Samples per curve in every figure.
inline constexpr std::size_t kFigureSamples = 400;

enum class TableFormat { Csv, Tsv };

std::optional<TableFormat> parse_table_format(std::string_view name);

using Cell = std::variant<double, std::int64_t, std::string>;

/// A rectangular table. The header is the first line; comment lines
/// follow it, prefixed with '#'.
struct TableArtifact {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    /// Throws Error{InvalidArgument} when a row width differs from the header.
    void add_row(std::vector<Cell> row);
};

/// 12 significant digits in scientific notation, e.g. "1.79035989826e-14".
std::string format_double(double v);

/// LF line endings; the delimiter follows `format`.
std::string render(const TableArtifact &table, TableFormat format);

struct RunConfig {
    HamiltonianParams params;
    Overlap x{0.5};
    std::optional<double> threshold;
    std::string output_path;
    TableFormat format = TableFormat::Csv;
};

/// Worker count from QSEARCH_THREADS; 1 when unset or invalid.
std::size_t worker_threads();

/// Calls fn(i) for i in [0, n) on up to `workers` threads. Each index is
/// visited exactly once; callers write results into slot i.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)> &fn);

/// One representative parameter set per case at x = 0.5, comparing the
/// specialised and general peak formulas with the exact peak.
TableArtifact emit_table1();

/// The three unit-probability Hamiltonians at alpha = beta = 1, x = 0.5.
TableArtifact emit_table2();

/// Prob(x >= cos(pi/8)) for N in {4, 8, 16} and sigma^2 in {0.1, 1, 10},
/// mu_theta = 3 pi / 8.
TableArtifact emit_table3();

enum class FigureId { Fig4, Fig5, Fig6 };

/// Long format: block, series, abscissa, value.
TableArtifact emit_fig_data(FigureId which);

}  // namespace qsearch

#endif
