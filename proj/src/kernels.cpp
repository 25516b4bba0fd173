#include "desinc/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace desinc {

double sinc(double x) {
    const double y = std::numbers::pi * x;
    // Below this point the two-term series is exact to double precision;
    // the next term (pi*x)^4/120 is under 1e-29.
    if (std::abs(x) < 1e-7) {
        return 1.0 - y * y / 6.0;
    }
    return std::sin(y) / y;
}

double arsinh(double x) {
    // std::asinh evaluates log(x + sqrt(1 + x^2)) without cancellation for
    // negative x and without overflowing x^2 for huge x.
    return std::asinh(x);
}

double q_func(double x) {
    if (x < 0.0) {
        throw std::domain_error("q_func: argument must be nonnegative");
    }
    if (x == 0.0) {
        return 1.0;  // limit of x/arsinh(x)
    }
    return x / arsinh(x);
}

double p_func(double x) {
    if (x < 0.0) {
        throw std::domain_error("p_func: argument must be nonnegative");
    }
    if (x == 0.0) {
        return 0.0;  // numerator vanishes, denominator tends to arsinh(1)
    }
    return x / arsinh(q_func(x));
}

double r_func(double x) { return p_func(x) - q_func(x); }

}  // namespace desinc
