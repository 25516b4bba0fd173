// Command-line front end: benchmark sweeps, single grid queries, and the
// kernel property checks.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "desinc/bounds.hpp"
#include "desinc/function_space.hpp"
#include "desinc/harness.hpp"
#include "desinc/selection.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheckFailed = 2;
constexpr int kExitIo = 3;

std::vector<desinc::Strategy> strategies_for(const std::string& name) {
    using desinc::QChoice;
    using desinc::Strategy;
    if (name == "standard") return {Strategy::standard()};
    if (name == "new1") return {Strategy::new1()};
    if (name == "new2") return {Strategy::new2()};
    if (name == "corollary") return {Strategy::general(QChoice::identity())};
    if (name == "all") {
        return {Strategy::standard(), Strategy::new1(), Strategy::new2(),
                Strategy::general(QChoice::identity())};
    }
    throw CLI::ValidationError("--strategy", "unknown strategy '" + name + "'");
}

int run_sweep_cmd(const std::string& function, const std::string& strategy, std::int64_t n_min,
                  std::int64_t n_max, std::int64_t grid_count, double range,
                  const std::string& out, const std::string& plot_dir) {
    desinc::SweepConfig cfg;
    cfg.function_label = function;
    cfg.strategies = strategies_for(strategy);
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    cfg.grid_count = grid_count;
    cfg.grid_half_range = range;
    cfg.output_path = out;
    const auto rows = desinc::run_sweep(cfg);
    desinc::emit_csv(rows, out);
    if (!plot_dir.empty()) {
        desinc::emit_plot_data(rows, plot_dir);
    }
    std::size_t uncertified = 0;
    for (const auto& r : rows) {
        if (!r.certified) ++uncertified;
    }
    std::fprintf(stderr, "wrote %zu rows to %s (%zu uncertified)\n", rows.size(), out.c_str(),
                 uncertified);
    return kExitOk;
}

int run_grid_cmd(const std::string& function, const std::string& strategy, std::int64_t n) {
    const auto strategies = strategies_for(strategy);
    if (strategies.size() != 1) {
        throw CLI::ValidationError("--strategy", "'all' is not valid for the grid command");
    }
    const auto builtin = desinc::find_builtin(function);
    if (!builtin) {
        throw CLI::ValidationError("--function", "unknown function '" + function + "'");
    }
    const auto grid = desinc::select(strategies.front(), builtin->certificate, n);
    const auto rep = desinc::bound_report(builtin->certificate, grid);
    std::printf("%.16e,%lld,%lld,%lld,%.16e,%.16e\n", grid.h, static_cast<long long>(grid.M),
                static_cast<long long>(grid.N), static_cast<long long>(grid.evals()),
                rep.constant_C, rep.headline_bound);
    return kExitOk;
}

int run_check_props_cmd(std::int64_t samples, std::uint64_t seed) {
    const auto report = desinc::check_props(samples, seed);
    std::fputs(report.text.c_str(), stdout);
    return report.all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DE-Sinc approximation: grid selection, error bounds, benchmark sweeps"};
    app.require_subcommand(1);

    std::string function = "f1";
    std::string strategy = "all";
    std::int64_t n_min = 2;
    std::int64_t n_max = 40;
    std::int64_t n = 10;
    std::int64_t grid_count = 20001;
    double range = 4.0;
    std::string out;
    std::string plot_dir;
    std::int64_t samples = 10000;
    std::uint64_t seed = 1;

    auto* sweep = app.add_subcommand("sweep", "run a (strategy, n) sweep and emit CSV");
    sweep->add_option("--function", function, "f1 or f2")->required();
    sweep->add_option("--strategy", strategy, "standard|new1|new2|corollary|all");
    sweep->add_option("--n-min", n_min, "smallest n");
    sweep->add_option("--n-max", n_max, "largest n");
    sweep->add_option("--grid", grid_count, "odd number of evaluation points");
    sweep->add_option("--range", range, "half-range of the evaluation grid");
    sweep->add_option("--out", out, "CSV output path")->required();
    sweep->add_option("--plot-dir", plot_dir, "directory for plot-ready series");

    auto* grid = app.add_subcommand("grid", "print h,M,N,evals,C,bound for one selection");
    grid->add_option("--function", function, "f1 or f2")->required();
    grid->add_option("--strategy", strategy, "standard|new1|new2|corollary")->required();
    grid->add_option("--n", n, "driving parameter")->required();

    auto* props = app.add_subcommand("check-props", "run the kernel property checks");
    props->add_option("--samples", samples, "sample count per property");
    props->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
        if (sweep->parsed()) {
            return run_sweep_cmd(function, strategy, n_min, n_max, grid_count, range, out,
                                 plot_dir);
        }
        if (grid->parsed()) {
            return run_grid_cmd(function, strategy, n);
        }
        return run_check_props_cmd(samples, seed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const desinc::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
