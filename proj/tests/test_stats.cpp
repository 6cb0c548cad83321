#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "parkrelay/rng.hpp"
#include "parkrelay/stats.hpp"

using namespace parkrelay;

TEST_SUITE("stats") {

TEST_CASE("binomial estimate: point value and interval regimes") {
    auto mid = binomial_estimate(500, 1000);
    CHECK(mid.p == doctest::Approx(0.5));
    CHECK(mid.half_width == doctest::Approx(wald_halfwidth(0.5, 1000)));
    CHECK(mid.half_width == doctest::Approx(0.030996).epsilon(1e-3));

    // Tail count below 5 switches to Wilson, which never collapses to zero.
    auto rare = binomial_estimate(2, 100000);
    CHECK(rare.p == doctest::Approx(2e-5));
    CHECK(rare.half_width == doctest::Approx(wilson_halfwidth(2e-5, 100000)));
    CHECK(rare.half_width > 0.0);
    auto none = binomial_estimate(0, 1000);
    CHECK(none.p == 0.0);
    CHECK(none.half_width > 0.0);
    auto all = binomial_estimate(1000, 1000);
    CHECK(all.p == 1.0);
    CHECK(all.half_width > 0.0);
}

TEST_CASE("binomial estimate: half-width shrinks like 1/sqrt(n)") {
    auto small = binomial_estimate(250, 1000);
    auto large = binomial_estimate(1000, 4000);
    CHECK(large.half_width == doctest::Approx(0.5 * small.half_width).epsilon(1e-6));
}

TEST_CASE("ks p-value: monotone in d, sane extremes") {
    CHECK(ks_p_value(0.0, 1000) == doctest::Approx(1.0));
    CHECK(ks_p_value(0.5, 1000) < 1e-12);
    double p1 = ks_p_value(0.02, 1000);
    double p2 = ks_p_value(0.04, 1000);
    double p3 = ks_p_value(0.08, 1000);
    CHECK(p1 > p2);
    CHECK(p2 > p3);
    // Pinned: Kolmogorov tail Q(1.36) = 0.0494858767554.
    double d = 1.36 / (std::sqrt(1e6) + 0.12 + 0.11 / std::sqrt(1e6));
    CHECK(ks_p_value(d, 1000000) == doctest::Approx(0.0494858767554).epsilon(1e-6));
}

TEST_CASE("ks test accepts true distribution, rejects shifted one") {
    std::mt19937_64 gen(1234);
    std::vector<double> u(20000);
    for (auto& v : u) v = uniform01(gen);
    auto ok = ks_test(u, [](double x) { return std::clamp(x, 0.0, 1.0); });
    CHECK(ok.p > 0.01);
    auto bad = ks_test(u, [](double x) { return std::clamp(x * x, 0.0, 1.0); });
    CHECK(bad.p < 1e-10);
    CHECK(bad.d > ok.d);
}

TEST_CASE("chi-square tail: pinned quantiles") {
    CHECK(chi_square_tail(3.841458820694124, 1) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(chi_square_tail(18.307038053275146, 10) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(chi_square_tail(0.0, 5) == 1.0);
    CHECK(chi_square_tail(1000.0, 5) < 1e-200);
}

TEST_CASE("chi-square gof: exact fit and gross misfit") {
    std::vector<double> expected = {100.0, 200.0, 300.0, 400.0};
    auto perfect = chi_square_gof(expected, expected);
    CHECK(perfect.stat == 0.0);
    CHECK(perfect.dof == 3);
    CHECK(perfect.p == 1.0);
    auto off = chi_square_gof({400.0, 300.0, 200.0, 100.0}, expected);
    CHECK(off.p < 1e-12);
    auto fitted = chi_square_gof(expected, expected, 2);
    CHECK(fitted.dof == 1);
    CHECK_THROWS_AS(chi_square_gof({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("spearman: perfect monotone, anti-monotone, ties, errors") {
    std::vector<double> x = {1.0, 2.0, 3.0, 4.0, 5.0};
    std::vector<double> up = {2.0, 8.0, 9.0, 100.0, 101.0};
    std::vector<double> down = {5.0, 4.0, 3.0, 2.0, 1.0};
    CHECK(spearman_rho(x, up) == doctest::Approx(1.0));
    CHECK(spearman_rho(x, down) == doctest::Approx(-1.0));
    CHECK(spearman_rho(x, std::vector<double>{7.0, 7.0, 7.0, 7.0, 7.0}) == 0.0);
    // Ties get averaged ranks: rho must sit strictly between -1 and 1.
    double tied = spearman_rho(x, std::vector<double>{1.0, 2.0, 2.0, 2.0, 3.0});
    CHECK(tied > 0.8);
    CHECK(tied < 1.0);
    CHECK_THROWS_AS(spearman_rho(x, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("average ranks handles ties by midrank") {
    auto r = average_ranks({10.0, 20.0, 20.0, 30.0});
    CHECK(r[0] == 1.0);
    CHECK(r[1] == 2.5);
    CHECK(r[2] == 2.5);
    CHECK(r[3] == 4.0);
}

TEST_CASE("running mean matches hand computation") {
    RunningMean rm;
    rm.add(1.0);
    rm.add(2.0);
    rm.add(3.0);
    CHECK(rm.mean() == doctest::Approx(2.0));
    // Sample sd = 1, so hw = z * 1/sqrt(3).
    CHECK(rm.half_width() == doctest::Approx(kZ95 / std::sqrt(3.0)).epsilon(1e-12));
    RunningMean empty;
    CHECK(empty.mean() == 0.0);
    CHECK(empty.half_width() == 0.0);
}

}  // TEST_SUITE
