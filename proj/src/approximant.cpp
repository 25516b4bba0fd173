#include "desinc/approximant.hpp"

#include <cmath>
#include <stdexcept>

#include "desinc/kernels.hpp"

namespace desinc {

SincApproximant SincApproximant::build(const TransformedFunction& F, const SincGrid& grid) {
    if (!(grid.h > 0.0)) {
        throw std::invalid_argument("SincApproximant: mesh size must be positive");
    }
    if (grid.M < 0 || grid.N < 0) {
        throw std::invalid_argument("SincApproximant: truncation counts must be nonnegative");
    }
    const std::int64_t count = grid.M + grid.N + 1;
    if (count > 100'000'000) {
        throw std::invalid_argument("SincApproximant: more than 1e8 samples requested");
    }
    std::vector<double> samples(static_cast<std::size_t>(count));
    for (std::int64_t k = -grid.M; k <= grid.N; ++k) {
        samples[static_cast<std::size_t>(k + grid.M)] =
            F.evaluate(static_cast<double>(k) * grid.h);
    }
    return SincApproximant(grid.h, grid.M, grid.N, std::move(samples));
}

double SincApproximant::evaluate(double x) const {
    // Two-pointer walk from both ends toward the index nearest x: |x - kh|
    // is V-shaped in k, so this visits terms in decreasing distance order.
    std::int64_t lo = -M_;
    std::int64_t hi = N_;
    double acc = 0.0;
    while (lo <= hi) {
        const double dlo = std::abs(x - static_cast<double>(lo) * h_);
        const double dhi = std::abs(x - static_cast<double>(hi) * h_);
        std::int64_t k;
        if (dlo >= dhi) {
            k = lo++;
        } else {
            k = hi--;
        }
        acc += samples_[static_cast<std::size_t>(k + M_)] *
               sinc((x - static_cast<double>(k) * h_) / h_);
    }
    return acc;
}

SupError sup_error(const SincApproximant& a, const TransformedFunction& F,
                   std::span<const double> points) {
    if (points.empty()) {
        throw std::invalid_argument("sup_error: point list must be nonempty");
    }
    SupError best{-1.0, 0.0};
    for (const double x : points) {
        const double err = std::abs(F.evaluate(x) - a.evaluate(x));
        if (err > best.value || (err == best.value && x < best.argmax)) {
            best.value = err;
            best.argmax = x;
        }
    }
    return best;
}

std::vector<double> experiment_grid(std::int64_t count, double half_range) {
    if (count < 3 || count % 2 == 0) {
        throw std::invalid_argument("experiment_grid: count must be odd and >= 3");
    }
    if (!(half_range > 0.0)) {
        throw std::invalid_argument("experiment_grid: half_range must be positive");
    }
    const std::int64_t half = (count - 1) / 2;
    std::vector<double> pts(static_cast<std::size_t>(count));
    for (std::int64_t i = -half; i <= half; ++i) {
        pts[static_cast<std::size_t>(i + half)] =
            static_cast<double>(i) * half_range / static_cast<double>(half);
    }
    return pts;
}

}  // namespace desinc
