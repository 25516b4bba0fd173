#pragma once

#include <cstdint>

#include "desinc/function_space.hpp"
#include "desinc/selection.hpp"

namespace desinc {

// Certified error bounds for a selected grid: the headline bound
// C * exp(-rate_exponent) of the matching selection rule and the sharper
// discretization + truncation split it majorizes.
struct BoundReport {
    double constant_C = 0.0;
    double rate_exponent = 0.0;
    double headline_bound = 0.0;
    double discretization_bound = 0.0;
    double truncation_bound = 0.0;
    double split_bound = 0.0;
    Strategy strategy = Strategy::standard();
    bool certified = true;
};

// Bound on the error of replacing F by its full cardinal series at mesh h.
double bound_discretization(const FunctionClass& c, double h);

// Bound on the dropped tails |k| > M, N for counts selected under q.
double bound_truncation(const FunctionClass& c, std::int64_t n, double h, const QChoice& q);

// The n-independent constants of the headline bounds.
double constant_exist(const FunctionClass& c);
double constant_new1(const FunctionClass& c);
double constant_new2(const FunctionClass& c);
double constant_general_q(const FunctionClass& c, const QChoice& q);

// Assembles the report for a grid produced by `select` from this
// certificate. Recomputes the selection and rejects grids that do not match.
BoundReport bound_report(const FunctionClass& c, const SincGrid& grid);

}  // namespace desinc
