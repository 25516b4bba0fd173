#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "desinc/function_space.hpp"
#include "desinc/selection.hpp"

namespace desinc {

// Truncated cardinal series sum_{k=-M}^{N} F(kh) sinc((x - kh)/h), stored as
// the samples F(kh). Immutable once built.
class SincApproximant {
  public:
    static SincApproximant build(const TransformedFunction& F, const SincGrid& grid);

    // Direct O(M+N) summation, accumulated smallest-magnitude terms first
    // (largest |x - kh| first) to curb roundoff near the error floor.
    double evaluate(double x) const;

    double h() const { return h_; }
    std::int64_t left_count() const { return M_; }
    std::int64_t right_count() const { return N_; }
    std::span<const double> samples() const { return samples_; }

  private:
    SincApproximant(double h, std::int64_t M, std::int64_t N, std::vector<double> samples)
        : h_(h), M_(M), N_(N), samples_(std::move(samples)) {}

    double h_;
    std::int64_t M_;
    std::int64_t N_;
    std::vector<double> samples_;  // samples_[k + M] = F(kh)
};

struct SupError {
    double value = 0.0;
    double argmax = 0.0;
};

// Max of |F(x) - approximant(x)| over the points; ties resolved toward the
// smallest x. Throws on an empty point list.
SupError sup_error(const SincApproximant& a, const TransformedFunction& F,
                   std::span<const double> points);

// `count` equispaced points on [-half_range, half_range], count odd and >= 3.
std::vector<double> experiment_grid(std::int64_t count, double half_range);

}  // namespace desinc
