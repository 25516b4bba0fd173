#include "desinc/harness.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "desinc/approximant.hpp"
#include "desinc/bounds.hpp"
#include "desinc/function_space.hpp"
#include "desinc/kernels.hpp"

namespace desinc {

namespace {

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

}  // namespace

std::vector<ExperimentRow> run_sweep(const SweepConfig& cfg) {
    const auto builtin = find_builtin(cfg.function_label);
    if (!builtin) {
        throw std::invalid_argument("run_sweep: unknown function label '" + cfg.function_label +
                                    "'");
    }
    if (cfg.strategies.empty()) {
        throw std::invalid_argument("run_sweep: strategy list must be nonempty");
    }
    if (cfg.n_min > cfg.n_max || cfg.n_min <= 0) {
        throw std::invalid_argument("run_sweep: need 0 < n_min <= n_max");
    }
    const std::vector<double> points = experiment_grid(cfg.grid_count, cfg.grid_half_range);
    const FunctionClass& cert = builtin->certificate;

    std::vector<ExperimentRow> rows;
    rows.reserve(static_cast<std::size_t>(cfg.strategies.size()) *
                 static_cast<std::size_t>(cfg.n_max - cfg.n_min + 1));
    for (const Strategy& strategy : cfg.strategies) {
        for (std::int64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
            const SincGrid grid = select(strategy, cert, n);
            const BoundReport rep = bound_report(cert, grid);
            const SincApproximant a = SincApproximant::build(builtin->transformed, grid);
            const SupError err = sup_error(a, builtin->transformed, points);
            ExperimentRow row;
            row.function_label = cfg.function_label;
            row.strategy_label = strategy.label();
            row.n = n;
            row.h = grid.h;
            row.M = grid.M;
            row.N = grid.N;
            row.evals = grid.evals();
            row.observed_sup_error = err.value;
            row.argmax_x = err.argmax;
            row.discretization_bound = rep.discretization_bound;
            row.truncation_bound = rep.truncation_bound;
            row.split_bound = rep.split_bound;
            row.headline_bound = rep.headline_bound;
            row.constant_C = rep.constant_C;
            row.certified = rep.certified;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void emit_csv(const std::vector<ExperimentRow>& rows, const std::string& path) {
    if (rows.empty()) {
        throw std::invalid_argument("emit_csv: row list must be nonempty");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("emit_csv: cannot open '" + path + "' for writing");
    }
    out << "function,strategy,n,h,M,N,evals,observed_sup_error,argmax_x,"
           "discretization_bound,truncation_bound,split_bound,headline_bound,"
           "constant_C,certified\n";
    for (const ExperimentRow& r : rows) {
        out << r.function_label << ',' << r.strategy_label << ',' << r.n << ',' << fmt_real(r.h)
            << ',' << r.M << ',' << r.N << ',' << r.evals << ','
            << fmt_real(r.observed_sup_error) << ',' << fmt_real(r.argmax_x) << ','
            << fmt_real(r.discretization_bound) << ',' << fmt_real(r.truncation_bound) << ','
            << fmt_real(r.split_bound) << ',' << fmt_real(r.headline_bound) << ','
            << fmt_real(r.constant_C) << ',' << (r.certified ? "true" : "false") << '\n';
    }
    out.flush();
    if (!out) {
        throw IoError("emit_csv: write to '" + path + "' failed");
    }
}

void emit_plot_data(const std::vector<ExperimentRow>& rows, const std::string& dir) {
    if (rows.empty()) {
        throw std::invalid_argument("emit_plot_data: row list must be nonempty");
    }
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("emit_plot_data: cannot create directory '" + dir + "': " + ec.message());
    }
    // Preserve first-appearance order of the (function, strategy) pairs.
    std::vector<std::pair<std::string, std::string>> keys;
    for (const ExperimentRow& r : rows) {
        std::pair<std::string, std::string> key{r.function_label, r.strategy_label};
        bool seen = false;
        for (const auto& k : keys) {
            if (k == key) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            keys.push_back(std::move(key));
        }
    }
    for (const auto& [fn, strat] : keys) {
        for (const bool bound_series : {false, true}) {
            const std::string name = fn + "_" + strat + (bound_series ? "_bound" : "_observed") +
                                     ".dat";
            const std::string path = (std::filesystem::path(dir) / name).string();
            std::ofstream out(path, std::ios::binary);
            if (!out) {
                throw IoError("emit_plot_data: cannot open '" + path + "' for writing");
            }
            for (const ExperimentRow& r : rows) {
                if (r.function_label != fn || r.strategy_label != strat) {
                    continue;
                }
                out << r.evals << ' '
                    << fmt_real(bound_series ? r.headline_bound : r.observed_sup_error) << '\n';
            }
            out.flush();
            if (!out) {
                throw IoError("emit_plot_data: write to '" + path + "' failed");
            }
        }
    }
}

namespace {

// Uniform [0, 1) from the top 53 bits; identical across standard libraries,
// unlike std::uniform_real_distribution.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct PropResult {
    std::string name;
    bool passed = true;
    double worst_margin = std::numeric_limits<double>::infinity();
    double worst_at = std::numeric_limits<double>::quiet_NaN();
};

PropResult check_monotone(const char* name, double (*fn)(double), std::vector<double> xs) {
    PropResult res{name};
    std::sort(xs.begin(), xs.end());
    double prev = fn(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double cur = fn(xs[i]);
        const double margin = cur - prev;
        if (margin < res.worst_margin) {
            res.worst_margin = margin;
            res.worst_at = xs[i - 1];
        }
        if (margin < 0.0) {
            res.passed = false;
        }
        prev = cur;
    }
    return res;
}

void append_result(std::ostringstream& out, const PropResult& r) {
    char line[160];
    if (std::isinf(r.worst_margin)) {
        std::snprintf(line, sizeof line, "%s  %-22s worst-margin=n/a\n",
                      r.passed ? "PASS" : "FAIL", r.name.c_str());
    } else {
        std::snprintf(line, sizeof line, "%s  %-22s worst-margin=%.8e at x=%.8e\n",
                      r.passed ? "PASS" : "FAIL", r.name.c_str(), r.worst_margin, r.worst_at);
    }
    out << line;
}

}  // namespace

PropCheckReport check_props(std::int64_t samples, std::uint64_t seed) {
    if (samples < 1) {
        throw std::invalid_argument("check_props: samples must be >= 1");
    }
    std::mt19937_64 rng(seed);
    const auto count = static_cast<std::size_t>(samples);

    auto draw = [&](double lo, double hi) {
        std::vector<double> xs(count);
        for (double& x : xs) {
            x = lo + (hi - lo) * next_unit(rng);
        }
        return xs;
    };
    auto draw_log = [&](double lo, double hi) {
        std::vector<double> xs(count);
        const double llo = std::log(lo);
        const double lhi = std::log(hi);
        for (double& x : xs) {
            x = std::exp(llo + (lhi - llo) * next_unit(rng));
        }
        return xs;
    };

    std::vector<PropResult> results;
    results.push_back(check_monotone("q-monotone", &q_func, draw(0.0, 1e6)));
    results.push_back(check_monotone("p-monotone", &p_func, draw(0.0, 1e6)));
    results.push_back(check_monotone("r-monotone", &r_func, draw(0.0, 1e6)));

    {
        // sinh(t) >= t sinh(2t/pi) for t >= 0.
        PropResult res{"sinh-product-lower"};
        for (const double t : draw(0.0, 50.0)) {
            const double margin =
                std::sinh(t) - t * std::sinh(2.0 / std::numbers::pi * t);
            if (margin < res.worst_margin) {
                res.worst_margin = margin;
                res.worst_at = t;
            }
            if (margin < 0.0) {
                res.passed = false;
            }
        }
        results.push_back(res);
    }
    {
        // arsinh(x)/arsinh(q(x)) <= pi/2 for x > 0.
        PropResult res{"arsinh-ratio-cap"};
        for (const double x : draw_log(1e-6, 1e6)) {
            const double margin = std::numbers::pi / 2 - arsinh(x) / arsinh(q_func(x));
            if (margin < res.worst_margin) {
                res.worst_margin = margin;
                res.worst_at = x;
            }
            if (margin < 0.0) {
                res.passed = false;
            }
        }
        results.push_back(res);
    }

    std::ostringstream out;
    char head[96];
    std::snprintf(head, sizeof head, "check-props: samples=%" PRId64 " seed=%" PRIu64 "\n",
                  samples, seed);
    out << head;
    bool all = true;
    int passed = 0;
    for (const PropResult& r : results) {
        append_result(out, r);
        all = all && r.passed;
        passed += r.passed ? 1 : 0;
    }
    char tail[48];
    std::snprintf(tail, sizeof tail, "result: %s (%d/%zu)\n", all ? "PASS" : "FAIL", passed,
                  results.size());
    out << tail;
    return {out.str(), all};
}

}  // namespace desinc
