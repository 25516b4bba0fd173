#include "desinc/function_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace desinc {

namespace {

// 2 / (1 + e^y) without overflow for any finite or infinite y.
double two_over_one_plus_exp(double y) {
    if (y > 0.0) {
        const double t = std::exp(-y);
        return 2.0 * t / (1.0 + t);
    }
    return 2.0 / (1.0 + std::exp(y));
}

}  // namespace

FunctionClass::FunctionClass(double strip_bound, double line_bound, double alpha, double beta,
                             double strip_half_width)
    : strip_bound_(strip_bound),
      line_bound_(line_bound),
      alpha_(alpha),
      beta_(beta),
      half_width_(strip_half_width) {
    if (!(strip_bound > 0.0) || !(line_bound > 0.0)) {
        throw std::invalid_argument("FunctionClass: envelope constants must be positive");
    }
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("FunctionClass: decay rates must be positive");
    }
    if (!(strip_half_width > 0.0) || !(strip_half_width < std::numbers::pi / 2)) {
        throw std::invalid_argument("FunctionClass: strip half-width must lie in (0, pi/2)");
    }
}

double de_transform(double x) { return std::tanh(std::numbers::pi / 2 * std::sinh(x)); }

std::pair<double, double> de_endpoint_distances(double x) {
    const double w = std::numbers::pi / 2 * std::sinh(x);
    // 1 - tanh(w) = 2/(e^{2w}+1), 1 + tanh(w) = 2/(e^{-2w}+1).
    return {two_over_one_plus_exp(2.0 * w), two_over_one_plus_exp(-2.0 * w)};
}

double decay_envelope(const FunctionClass& c, double x) {
    // R e^{-pi*rate*s} / (1 + e^{-pi s})^{alpha+beta} with s = sinh|x| and
    // rate the decay exponent on the side of x; equal to the direct form but
    // free of overflow.
    const double s = std::sinh(std::abs(x));
    const double rate = x >= 0.0 ? c.beta() : c.alpha();
    const double es = std::exp(-std::numbers::pi * s);
    return c.R() * std::exp(-std::numbers::pi * rate * s) /
           std::pow(1.0 + es, c.alpha() + c.beta());
}

BuiltinFunction builtin_f1() {
    const FunctionClass cert(2.0, 2.0, 0.5, 0.5, 1.5);
    IntervalFunction f{[](double, double om, double op) { return std::sqrt(om * op); }, "f1"};
    TransformedFunction F{[](double x) {
                              const auto [om, op] = de_endpoint_distances(x);
                              return std::sqrt(om * op);
                          },
                          cert, "f1"};
    return {std::move(f), cert, std::move(F)};
}

BuiltinFunction builtin_f2() {
    const FunctionClass cert(4.0, 4.0, 0.5, 0.75, std::numbers::pi / 6);
    IntervalFunction f{[](double t, double om, double op) {
                           return std::sqrt(1.0 + t * t) * std::sqrt(op) * std::pow(om, 0.75);
                       },
                       "f2"};
    TransformedFunction F{[](double x) {
                              const auto [om, op] = de_endpoint_distances(x);
                              const double t = de_transform(x);
                              return std::sqrt(1.0 + t * t) * std::sqrt(op) * std::pow(om, 0.75);
                          },
                          cert, "f2"};
    return {std::move(f), cert, std::move(F)};
}

std::optional<BuiltinFunction> find_builtin(const std::string& label) {
    if (label == "f1") {
        return builtin_f1();
    }
    if (label == "f2") {
        return builtin_f2();
    }
    return std::nullopt;
}

}  // namespace desinc
