#include "desinc/selection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "desinc/kernels.hpp"

namespace desinc {

namespace {

// Ceiling with a relative downward nudge. The selection formulas hit exact
// integers in several documented cases (alpha = beta makes the new1 argument
// exactly n); without the nudge a one-ulp excess would bump the count by one.
std::int64_t ceil_count(double y) {
    if (!(y < 4.611686018427388e18)) {  // 2^62
        throw std::invalid_argument("selection: truncation count exceeds 2^62");
    }
    const double nudged = y - 1e-9 * std::max(1.0, std::abs(y));
    const double c = std::ceil(nudged);
    return c < 0.0 ? 0 : static_cast<std::int64_t>(c);
}

void require_positive_n(std::int64_t n) {
    if (n <= 0) {
        throw std::invalid_argument("selection: n must be positive");
    }
}

}  // namespace

QChoice QChoice::default_q() { return QChoice(Kind::default_q, {}, "default"); }

QChoice QChoice::identity() { return QChoice(Kind::identity, {}, "identity"); }

QChoice QChoice::custom(std::function<double(double)> fn, std::string label) {
    if (!fn) {
        throw std::invalid_argument("QChoice: custom function must be callable");
    }
    // Spot check q(x) >= 0 and nondecreasing on a fixed log-spaced sample.
    const int kSamples = 1000;
    double prev = fn(0.0);
    if (!(prev >= 0.0)) {
        throw std::invalid_argument("QChoice: custom q must be nonnegative at 0");
    }
    for (int i = 0; i < kSamples; ++i) {
        const double x = 1e-6 * std::pow(1e12, static_cast<double>(i) / (kSamples - 1));
        const double v = fn(x);
        if (!(v >= 0.0) || std::isnan(v)) {
            throw std::invalid_argument("QChoice: custom q must be nonnegative");
        }
        if (v < prev) {
            throw std::invalid_argument("QChoice: custom q must be nondecreasing");
        }
        prev = v;
    }
    return QChoice(Kind::custom, std::move(fn), std::move(label));
}

double QChoice::operator()(double x) const {
    switch (kind_) {
        case Kind::default_q:
            return q_func(x);
        case Kind::identity:
            return x;
        case Kind::custom:
            return fn_(x);
    }
    throw std::logic_error("QChoice: invalid tag");
}

Strategy Strategy::standard() { return Strategy(Kind::standard, QChoice::default_q()); }
Strategy Strategy::new1() { return Strategy(Kind::new1, QChoice::default_q()); }
Strategy Strategy::new2() { return Strategy(Kind::new2, QChoice::default_q()); }
Strategy Strategy::general(QChoice q) { return Strategy(Kind::general_q, std::move(q)); }

const QChoice& Strategy::q() const {
    if (kind_ != Kind::general_q) {
        throw std::logic_error("Strategy: q() is only defined for general_q");
    }
    return q_;
}

std::string Strategy::label() const {
    switch (kind_) {
        case Kind::standard:
            return "standard";
        case Kind::new1:
            return "new1";
        case Kind::new2:
            return "new2";
        case Kind::general_q:
            switch (q_.kind()) {
                case QChoice::Kind::identity:
                    return "corollary";
                case QChoice::Kind::default_q:
                    return "generalq-default";
                case QChoice::Kind::custom:
                    return "generalq-" + q_.label();
            }
    }
    throw std::logic_error("Strategy: invalid tag");
}

SincGrid select_standard(const FunctionClass& c, std::int64_t n) {
    require_positive_n(n);
    const double dn_mu = c.d() * static_cast<double>(n) / c.mu();
    if (!(2.0 * dn_mu > 1.0)) {
        throw std::domain_error("select_standard: 2dn/mu must exceed 1");
    }
    SincGrid g;
    g.n = n;
    g.strategy = Strategy::standard();
    g.h = std::log(2.0 * dn_mu) / static_cast<double>(n);
    const std::int64_t reduce =
        static_cast<std::int64_t>(std::floor(std::log(c.nu() / c.mu()) / g.h));
    std::int64_t small = n - reduce;
    if (small < 0) {
        small = 0;
        g.warning = "truncation count clamped to 0 (n far below certification threshold); ";
    }
    if (c.alpha() <= c.beta()) {
        g.M = n;
        g.N = small;
    } else {
        g.M = small;
        g.N = n;
    }
    const double n_min = c.nu() * std::numbers::e / (2.0 * c.d());
    if (static_cast<double>(n) < n_min) {
        g.valid = false;
        g.warning += "bound uncertified: n below nu*e/(2d)";
    }
    return g;
}

SincGrid select_new1(const FunctionClass& c, std::int64_t n) {
    require_positive_n(n);
    const double qv = q_func(c.d() * static_cast<double>(n) / c.mu());
    SincGrid g;
    g.n = n;
    g.strategy = Strategy::new1();
    g.h = arsinh(qv) / static_cast<double>(n);
    const std::int64_t small = ceil_count(arsinh(c.mu() / c.nu() * qv) / g.h);
    if (c.alpha() <= c.beta()) {
        g.M = n;
        g.N = small;
    } else {
        g.M = small;
        g.N = n;
    }
    return g;
}

SincGrid select_new2(const FunctionClass& c, std::int64_t n) {
    require_positive_n(n);
    const double x = c.d() * static_cast<double>(n) / c.mu();
    const double qv = q_func(x);
    SincGrid g;
    g.n = n;
    g.strategy = Strategy::new2();
    g.h = arsinh(x) / static_cast<double>(n);
    g.M = ceil_count(arsinh(c.mu() / c.alpha() * qv) / g.h);
    g.N = ceil_count(arsinh(c.mu() / c.beta() * qv) / g.h);
    return g;
}

SincGrid select_general_q(const FunctionClass& c, std::int64_t n, const QChoice& q) {
    require_positive_n(n);
    // The default weight makes h = d/(mu q(dn/mu)) algebraically identical to
    // the new2 mesh; computing it through select_new2 keeps the two routes
    // bit-for-bit equal.
    if (q.kind() == QChoice::Kind::default_q) {
        SincGrid g = select_new2(c, n);
        g.strategy = Strategy::general(q);
        return g;
    }
    SincGrid g;
    g.n = n;
    g.strategy = Strategy::general(q);
    if (q.kind() == QChoice::Kind::identity) {
        const double nn = static_cast<double>(n);
        g.h = 1.0 / nn;
        g.M = ceil_count(nn * arsinh(c.d() * nn / c.alpha()));
        g.N = ceil_count(nn * arsinh(c.d() * nn / c.beta()));
        return g;
    }
    const double qv = q(c.d() * static_cast<double>(n) / c.mu());
    if (!(qv > 0.0)) {
        throw std::domain_error("select_general_q: q(dn/mu) must be positive");
    }
    g.h = c.d() / (c.mu() * qv);
    g.M = ceil_count(arsinh(c.mu() / c.alpha() * qv) / g.h);
    g.N = ceil_count(arsinh(c.mu() / c.beta() * qv) / g.h);
    return g;
}

SincGrid select(const Strategy& s, const FunctionClass& c, std::int64_t n) {
    switch (s.kind()) {
        case Strategy::Kind::standard:
            return select_standard(c, n);
        case Strategy::Kind::new1:
            return select_new1(c, n);
        case Strategy::Kind::new2:
            return select_new2(c, n);
        case Strategy::Kind::general_q:
            return select_general_q(c, n, s.q());
    }
    throw std::logic_error("select: invalid strategy tag");
}

}  // namespace desinc
