#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace desinc {

// Decay certificate for a function F on the real line: |F| is bounded by
// L on the analyticity strip of half-width d and by the double-exponential
// envelope R / ((1+e^{-pi sinh x})^alpha (1+e^{pi sinh x})^beta) on the line.
// The constants are asserted by the caller, never fitted.
class FunctionClass {
  public:
    FunctionClass(double strip_bound, double line_bound, double alpha, double beta,
                  double strip_half_width);

    double L() const { return strip_bound_; }
    double R() const { return line_bound_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double d() const { return half_width_; }
    double mu() const { return alpha_ < beta_ ? alpha_ : beta_; }
    double nu() const { return alpha_ < beta_ ? beta_ : alpha_; }

  private:
    double strip_bound_;
    double line_bound_;
    double alpha_;
    double beta_;
    double half_width_;
};

// A function on the real line together with its decay certificate.
struct TransformedFunction {
    std::function<double(double)> evaluate;
    FunctionClass certificate;
    std::string label;
};

// A function on [-1, 1] evaluated from (t, 1-t, 1+t) so that fractional
// powers of the endpoint distances keep full precision near t = +-1.
struct IntervalFunction {
    std::function<double(double t, double one_minus_t, double one_plus_t)> evaluate_stable;
    std::string label;
};

struct BuiltinFunction {
    IntervalFunction on_interval;
    FunctionClass certificate;
    TransformedFunction transformed;
};

// t = tanh((pi/2) sinh x), mapping R onto (-1, 1).
double de_transform(double x);

// (1 - t, 1 + t) for t = de_transform(x), each computed to full relative
// precision even where t is within 1e-16 of +-1.
std::pair<double, double> de_endpoint_distances(double x);

// The real-line envelope of the certificate at x, evaluated in an
// overflow-free factored form.
double decay_envelope(const FunctionClass& c, double x);

BuiltinFunction builtin_f1();  // (1 - t^2)^{1/2}
BuiltinFunction builtin_f2();  // (1 + t^2)^{1/2} (1 + t)^{1/2} (1 - t)^{3/4}

// Lookup by CLI label ("f1" or "f2").
std::optional<BuiltinFunction> find_builtin(const std::string& label);

}  // namespace desinc
