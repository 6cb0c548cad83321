#include <doctest.h>

#include <cmath>

#include "parkrelay/quadrature.hpp"

using namespace parkrelay;

namespace {
double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}
}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("finite: smooth integrands to near machine precision") {
    double poly = integrate_finite([](double t) { return 3.0 * t * t; }, 0.0, 2.0, 1e-13);
    CHECK(rel_err(poly, 8.0) < 1e-12);
    double trig = integrate_finite([](double t) { return std::sin(t); }, 0.0, M_PI, 1e-13);
    CHECK(rel_err(trig, 2.0) < 1e-12);
}

TEST_CASE("finite: integrable endpoint singularities") {
    double invsqrt =
        integrate_finite([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, 1e-12);
    CHECK(rel_err(invsqrt, 2.0) < 1e-10);
    double logx = integrate_finite([](double t) { return std::log(t); }, 0.0, 1.0, 1e-12);
    CHECK(rel_err(logx, -1.0) < 1e-10);
}

TEST_CASE("finite: shifted interval and odd cancellation") {
    double shifted =
        integrate_finite([](double t) { return std::exp(-t); }, 2.0, 5.0, 1e-12);
    CHECK(rel_err(shifted, std::exp(-2.0) - std::exp(-5.0)) < 1e-11);
    double odd = integrate_finite([](double t) { return t * t * t; }, -1.0, 1.0, 1e-12);
    CHECK(std::abs(odd) < 1e-12);
}

TEST_CASE("semi-infinite: gamma, gaussian, and power tails") {
    double g5 = integrate_to_infinity(
        [](double t) { return t > 0.0 ? t * t * t * t * std::exp(-t) : 0.0; }, 0.0, 1e-12);
    CHECK(rel_err(g5, 24.0) < 1e-10);
    double gauss =
        integrate_to_infinity([](double t) { return std::exp(-t * t); }, 0.0, 1e-12);
    CHECK(rel_err(gauss, 0.5 * std::sqrt(M_PI)) < 1e-10);
    double tail = integrate_to_infinity([](double t) { return 1.0 / (t * t); }, 1.0, 1e-12);
    CHECK(rel_err(tail, 1.0) < 1e-9);
}

TEST_CASE("semi-infinite: shifted exponential start point") {
    double shifted =
        integrate_to_infinity([](double t) { return std::exp(-2.0 * t); }, 3.0, 1e-12);
    CHECK(rel_err(shifted, 0.5 * std::exp(-6.0)) < 1e-10);
}

}  // TEST_SUITE
