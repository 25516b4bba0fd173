#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "desinc/selection.hpp"

namespace desinc {

// File-system failures from the emitters, so callers can map them to a
// dedicated exit code.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepConfig {
    std::string function_label;
    std::vector<Strategy> strategies;
    std::int64_t n_min = 2;
    std::int64_t n_max = 40;
    std::int64_t grid_count = 20001;
    double grid_half_range = 4.0;
    std::string output_path;
};

// One (function, strategy, n) record of the benchmark.
struct ExperimentRow {
    std::string function_label;
    std::string strategy_label;
    std::int64_t n = 0;
    double h = 0.0;
    std::int64_t M = 0;
    std::int64_t N = 0;
    std::int64_t evals = 0;
    double observed_sup_error = 0.0;
    double argmax_x = 0.0;
    double discretization_bound = 0.0;
    double truncation_bound = 0.0;
    double split_bound = 0.0;
    double headline_bound = 0.0;
    double constant_C = 0.0;
    bool certified = true;
};

// Runs selection -> build -> sup-error -> bounds for every (strategy, n) in
// the config; rows come out in strategy order, then ascending n.
std::vector<ExperimentRow> run_sweep(const SweepConfig& cfg);

// CSV with a fixed header and 17-significant-digit reals (lossless
// round-trip of doubles).
void emit_csv(const std::vector<ExperimentRow>& rows, const std::string& path);

// Per (function, strategy): <function>_<strategy>_observed.dat and
// <function>_<strategy>_bound.dat, two whitespace-separated columns
// (evals, value).
void emit_plot_data(const std::vector<ExperimentRow>& rows, const std::string& dir);

struct PropCheckReport {
    std::string text;
    bool all_passed = false;
};

// Seeded statistical checks of the kernel function properties (monotonicity
// of p, q, r; the sinh product inequality; the arsinh ratio cap). The report
// is byte-identical for a fixed (samples, seed).
PropCheckReport check_props(std::int64_t samples, std::uint64_t seed);

}  // namespace desinc
