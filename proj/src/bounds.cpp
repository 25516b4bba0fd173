#include "desinc/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "desinc/kernels.hpp"

namespace desinc {

namespace {

constexpr double kPi = std::numbers::pi;

// cos((pi/2) sin d), via cos((pi/2) sin d) = sin(pi sin^2(pi/4 - d/2)).
// Direct evaluation loses half the significant digits when d approaches
// pi/2 (the factor is ~4e-3 at d = 1.5); the reduced form keeps them all.
double cos_half_pi_sin(double d) {
    const double u = std::sin(kPi / 4 - d / 2);
    return std::sin(kPi * u * u);
}

double cos_factor(const FunctionClass& c) {
    return std::pow(cos_half_pi_sin(c.d()), c.alpha() + c.beta());
}

}  // namespace

double bound_discretization(const FunctionClass& c, double h) {
    if (!(h > 0.0)) {
        throw std::domain_error("bound_discretization: h must be positive");
    }
    const double pref = 4.0 * c.L() /
                        (kPi * kPi * c.d() * c.mu() * (1.0 - std::exp(-2.0 * kPi * c.d() / h)) *
                         cos_factor(c) * std::cos(c.d()));
    return pref * std::exp(-kPi * c.d() / h);
}

double bound_truncation(const FunctionClass& c, std::int64_t n, double h, const QChoice& q) {
    if (!(h > 0.0)) {
        throw std::domain_error("bound_truncation: h must be positive");
    }
    if (n <= 0) {
        throw std::invalid_argument("bound_truncation: n must be positive");
    }
    const double qv = q(c.d() * static_cast<double>(n) / c.mu());
    return 2.0 * c.R() / (kPi * c.mu() * h * std::sqrt(1.0 + qv * qv)) *
           std::exp(-kPi * c.mu() * qv);
}

double constant_exist(const FunctionClass& c) {
    const double inner =
        2.0 * c.L() / (kPi * c.mu() * (1.0 - std::exp(-kPi * c.mu() * std::numbers::e)) *
                       cos_factor(c) * std::cos(c.d()));
    return 2.0 / (kPi * c.d()) * (inner + c.R() * std::exp(kPi * c.nu() / 2.0));
}

double constant_new1(const FunctionClass& c) {
    const double x = c.d() / c.mu();
    const double inner = 2.0 * c.L() * std::exp(-kPi * c.mu() * r_func(x)) /
                         (kPi * c.mu() * (1.0 - std::exp(-2.0 * kPi * c.mu() * p_func(x))) *
                          cos_factor(c) * std::cos(c.d()));
    return 2.0 / (kPi * c.d()) * (inner + kPi / 2.0 * c.R());
}

double constant_general_q(const FunctionClass& c, const QChoice& q) {
    const double qv = q(c.d() / c.mu());
    const double inner =
        2.0 * c.L() / (kPi * c.mu() * (1.0 - std::exp(-2.0 * kPi * c.mu() * qv)) *
                       cos_factor(c) * std::cos(c.d()));
    return 2.0 / (kPi * c.d()) * (inner + c.R());
}

double constant_new2(const FunctionClass& c) {
    return constant_general_q(c, QChoice::default_q());
}

BoundReport bound_report(const FunctionClass& c, const SincGrid& grid) {
    const SincGrid expected = select(grid.strategy, c, grid.n);
    if (expected.h != grid.h || expected.M != grid.M || expected.N != grid.N) {
        throw std::invalid_argument(
            "bound_report: grid does not match its strategy for this certificate");
    }

    BoundReport rep;
    rep.strategy = grid.strategy;
    rep.certified = grid.valid;

    const double dn = c.d() * static_cast<double>(grid.n);
    QChoice trunc_q = QChoice::default_q();
    switch (grid.strategy.kind()) {
        case Strategy::Kind::standard:
            rep.constant_C = constant_exist(c);
            rep.rate_exponent = kPi * dn / std::log(2.0 * dn / c.mu());
            break;
        case Strategy::Kind::new1:
            rep.constant_C = constant_new1(c);
            rep.rate_exponent = kPi * dn / arsinh(dn / c.mu());
            break;
        case Strategy::Kind::new2:
            rep.constant_C = constant_new2(c);
            rep.rate_exponent = kPi * dn / arsinh(dn / c.mu());
            break;
        case Strategy::Kind::general_q:
            trunc_q = grid.strategy.q();
            rep.constant_C = constant_general_q(c, trunc_q);
            rep.rate_exponent = trunc_q.kind() == QChoice::Kind::identity
                                    ? kPi * dn
                                    : kPi * c.mu() * trunc_q(dn / c.mu());
            break;
    }

    rep.headline_bound = rep.constant_C * std::exp(-rep.rate_exponent);
    rep.discretization_bound = bound_discretization(c, grid.h);
    rep.truncation_bound = bound_truncation(c, grid.n, grid.h, trunc_q);
    rep.split_bound = rep.discretization_bound + rep.truncation_bound;
    return rep;
}

}  // namespace desinc
