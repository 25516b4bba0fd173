#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "desinc/kernels.hpp"
#include "golden_values.hpp"

using namespace desinc;

namespace {

double ulp_of(double x) { return std::nextafter(std::abs(x), INFINITY) - std::abs(x); }

std::vector<double> sorted_uniform(std::size_t count, double lo, double hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> xs(count);
    for (double& x : xs) {
        x = lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    }
    std::sort(xs.begin(), xs.end());
    return xs;
}

}  // namespace

TEST_CASE("sinc at the removable singularity and at integers") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::abs(sinc(1.0)) <= 1e-15);
    for (int k = 1; k <= 20; ++k) {
        CHECK(std::abs(sinc(k)) <= 1e-15);
        CHECK(std::abs(sinc(-k)) <= 1e-15);
    }
    CHECK(sinc(0.5) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-15));
}

TEST_CASE("sinc is even, bounded by 1, and continuous across the series branch") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        const double x = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 40.0;
        CHECK(sinc(x) == sinc(-x));
        CHECK(std::abs(sinc(x)) <= 1.0);
    }
    // Values straddling the series cutoff at 1e-7 agree to double precision.
    const double below = 9.9999e-8;
    const double above = 1.0001e-7;
    const double yb = std::numbers::pi * below;
    const double ya = std::numbers::pi * above;
    CHECK(sinc(below) == doctest::Approx(1.0 - yb * yb / 6.0).epsilon(1e-15));
    CHECK(sinc(above) == doctest::Approx(1.0 - ya * ya / 6.0).epsilon(1e-15));
}

TEST_CASE("arsinh basics") {
    CHECK(arsinh(0.0) == 0.0);
    CHECK(arsinh(std::sinh(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(arsinh(30.0) - golden::arsinh_30) <= ulp_of(golden::arsinh_30));
    // No overflow of x^2 for huge arguments.
    CHECK(arsinh(1e300) == doctest::Approx(golden::arsinh_1e300).epsilon(1e-15));
}

TEST_CASE("arsinh is odd and inverts sinh") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 5000; ++i) {
        const double t = (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 40.0;
        CHECK(arsinh(-t) == -arsinh(t));
        CHECK(arsinh(std::sinh(t)) == doctest::Approx(t).epsilon(1e-12));
    }
}

TEST_CASE("q_func values and domain") {
    CHECK(q_func(0.0) == 1.0);
    const double s1 = std::sinh(1.0);
    CHECK(q_func(s1) == doctest::Approx(s1).epsilon(1e-15));
    CHECK(q_func(30.0) == doctest::Approx(golden::q_30).epsilon(1e-14));
    CHECK_THROWS_AS(q_func(-1e-12), std::domain_error);
}

TEST_CASE("p_func values and domain") {
    CHECK(p_func(0.0) == 0.0);
    const double s1 = std::sinh(1.0);
    CHECK(p_func(s1) == doctest::Approx(s1).epsilon(1e-15));
    CHECK(p_func(30.0) == doctest::Approx(golden::p_30).epsilon(1e-14));
    CHECK_THROWS_AS(p_func(-0.5), std::domain_error);
}

TEST_CASE("r_func values") {
    const double s1 = std::sinh(1.0);
    CHECK(std::abs(r_func(s1)) <= 1e-14);
    CHECK(r_func(0.0) == -1.0);
    CHECK(r_func(30.0) == doctest::Approx(golden::r_30).epsilon(1e-13));
    CHECK_THROWS_AS(r_func(-2.0), std::domain_error);
}

TEST_CASE("q, p, r are nondecreasing on sorted samples") {
    const auto xs = sorted_uniform(10000, 0.0, 1e6, 21);
    double pq = q_func(xs[0]);
    double pp = p_func(xs[0]);
    double pr = r_func(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double cq = q_func(xs[i]);
        const double cp = p_func(xs[i]);
        const double cr = r_func(xs[i]);
        CHECK(cq >= pq);
        CHECK(cp >= pp);
        CHECK(cr >= pr);
        pq = cq;
        pp = cp;
        pr = cr;
    }
}

TEST_CASE("sinh(t) >= t sinh(2t/pi), equality only at t = 0") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 10000; ++i) {
        const double t = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 50.0;
        const double lhs = std::sinh(t);
        const double rhs = t * std::sinh(2.0 / std::numbers::pi * t);
        CHECK(lhs >= rhs);
        if (t > 0.0) {
            CHECK(lhs > rhs);
        }
    }
    CHECK(std::sinh(0.0) == 0.0 * std::sinh(0.0));
}

TEST_CASE("arsinh(x)/arsinh(q(x)) <= pi/2") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10000; ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double x = 1e-6 * std::pow(1e12, u);
        CHECK(arsinh(x) / arsinh(q_func(x)) <= std::numbers::pi / 2);
    }
}
