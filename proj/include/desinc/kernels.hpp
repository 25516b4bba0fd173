#pragma once

namespace desinc {

// Normalized cardinal sine, sin(pi*x)/(pi*x), with sinc(0) = 1.
double sinc(double x);

// Inverse hyperbolic sine, log(x + sqrt(1 + x^2)).
double arsinh(double x);

// q(x) = x / arsinh(x) for x > 0, extended by its limit q(0) = 1.
// Throws std::domain_error for x < 0.
double q_func(double x);

// p(x) = x / arsinh(q(x)) for x > 0, extended by its limit p(0) = 0.
// Throws std::domain_error for x < 0.
double p_func(double x);

// r(x) = p(x) - q(x); r(0) = -1 under the limit conventions above.
double r_func(double x);

}  // namespace desinc
