#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "desinc/function_space.hpp"

namespace desinc {

// The weight function q used by the generalized selection rule. The default
// is q(x) = x/arsinh(x); Identity is q(x) = x; Custom accepts any
// nonnegative nondecreasing function (spot-checked at construction).
class QChoice {
  public:
    enum class Kind { default_q, identity, custom };

    static QChoice default_q();
    static QChoice identity();
    static QChoice custom(std::function<double(double)> fn, std::string label);

    double operator()(double x) const;
    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }

  private:
    QChoice(Kind kind, std::function<double(double)> fn, std::string label)
        : kind_(kind), fn_(std::move(fn)), label_(std::move(label)) {}

    Kind kind_;
    std::function<double(double)> fn_;  // engaged for custom only
    std::string label_;
};

// Which selection rule produced a grid.
class Strategy {
  public:
    enum class Kind { standard, new1, new2, general_q };

    static Strategy standard();
    static Strategy new1();
    static Strategy new2();
    static Strategy general(QChoice q);

    Kind kind() const { return kind_; }
    const QChoice& q() const;  // valid for general_q only
    std::string label() const;

  private:
    Strategy(Kind kind, QChoice q) : kind_(kind), q_(std::move(q)) {}

    Kind kind_;
    QChoice q_;
};

// Mesh size and truncation numbers selected for a certificate at driving
// parameter n. `valid` is false when the producing rule's certification
// condition on n fails; the grid itself is still usable.
struct SincGrid {
    double h = 0.0;
    std::int64_t M = 0;
    std::int64_t N = 0;
    std::int64_t n = 0;
    Strategy strategy = Strategy::standard();
    bool valid = true;
    std::string warning;

    std::int64_t evals() const { return M + N + 1; }
};

// h = log(2dn/mu)/n with the floor-reduced count on the faster-decaying
// side. Certified only for n >= nu*e/(2d); below that the grid is returned
// with valid = false. Throws if n <= 0 or 2dn/mu <= 1.
SincGrid select_standard(const FunctionClass& c, std::int64_t n);

// h = arsinh(q(dn/mu))/n; the faster-decaying side gets the ceiling-formula
// count, the other equals n. No certification condition.
SincGrid select_new1(const FunctionClass& c, std::int64_t n);

// h = arsinh(dn/mu)/n with both counts from the ceiling formula; both may be
// smaller than n.
SincGrid select_new2(const FunctionClass& c, std::int64_t n);

// h = d/(mu q(dn/mu)) with both counts from the ceiling formula under the
// chosen q. DefaultQ reproduces select_new2 bit for bit; Identity gives
// h = 1/n with M = ceil(n arsinh(dn/alpha)), N = ceil(n arsinh(dn/beta)).
SincGrid select_general_q(const FunctionClass& c, std::int64_t n, const QChoice& q);

// Dispatch on the strategy tag.
SincGrid select(const Strategy& s, const FunctionClass& c, std::int64_t n);

}  // namespace desinc
