#pragma once

// Estimation and hypothesis-test helpers for the Monte Carlo side:
// binomial confidence intervals, Kolmogorov-Smirnov, chi-square
// goodness of fit, Spearman rank correlation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "parkrelay/specfun.hpp"

namespace parkrelay {

constexpr double kZ95 = 1.959963984540054;

struct BinomialEstimate {
    double p = 0.0;
    double half_width = 0.0;
    long long n = 0;
};

inline double wald_halfwidth(double p, long long n) {
    return kZ95 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

inline double wilson_halfwidth(double p, long long n) {
    double z2 = kZ95 * kZ95;
    double nn = static_cast<double>(n);
    return kZ95 / (1.0 + z2 / nn) *
           std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
}

// Wald interval, switching to Wilson when either tail count drops below 5
// (Wald degrades at the small outage probabilities Fig. 2 lives at).
inline BinomialEstimate binomial_estimate(long long successes, long long n) {
    double p = static_cast<double>(successes) / static_cast<double>(n);
    double tail = std::min(static_cast<double>(successes),
                           static_cast<double>(n - successes));
    double hw = tail < 5.0 ? wilson_halfwidth(p, n) : wald_halfwidth(p, n);
    return {p, hw, n};
}

// Tail probability of the Kolmogorov distribution with the standard
// finite-n argument correction. The alternating series diverges in useful
// digits as lambda -> 0; when successive terms stop shrinking the tail
// probability is 1 to every digit that matters.
inline double ks_p_value(double d, long long n) {
    double rootn = std::sqrt(static_cast<double>(n));
    double lambda = (rootn + 0.12 + 0.11 / rootn) * d;
    double a2 = -2.0 * lambda * lambda;
    double sum = 0.0, sign = 1.0, prev_term = 0.0;
    for (int k = 1; k <= 100; ++k) {
        double term = 2.0 * std::exp(a2 * k * k);
        sum += sign * term;
        if (term <= 1e-3 * prev_term || term <= 1e-10 * sum)
            return std::clamp(sum, 0.0, 1.0);
        sign = -sign;
        prev_term = term;
    }
    return 1.0;
}

struct KsResult {
    double d = 0.0;
    double p = 0.0;
};

// Two-sided KS statistic of samples against a reference CDF.
template <typename Cdf>
KsResult ks_test(std::vector<double> samples, Cdf&& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double f = cdf(samples[i]);
        double lo = static_cast<double>(i) / n;
        double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(f - lo, hi - f));
    }
    return {d, ks_p_value(d, static_cast<long long>(samples.size()))};
}

// Upper tail of the chi-square distribution.
inline double chi_square_tail(double stat, int dof) {
    if (stat <= 0.0) return 1.0;
    return regularized_gamma_q(0.5 * dof, 0.5 * stat);
}

struct ChiSquareResult {
    double stat = 0.0;
    int dof = 0;
    double p = 1.0;
};

inline ChiSquareResult chi_square_gof(const std::vector<double>& observed,
                                      const std::vector<double>& expected,
                                      int fitted_params = 0) {
    if (observed.size() != expected.size() || observed.empty())
        throw std::invalid_argument("chi_square_gof: mismatched bins");
    double stat = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        double diff = observed[i] - expected[i];
        stat += diff * diff / expected[i];
    }
    int dof = static_cast<int>(observed.size()) - 1 - fitted_params;
    return {stat, dof, chi_square_tail(stat, dof)};
}

inline std::vector<double> average_ranks(const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    std::size_t i = 0;
    while (i < idx.size()) {
        std::size_t j = i;
        while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
        double avg = 0.5 * static_cast<double>(i + j) + 1.0;  // ranks 1-based, ties averaged
        for (std::size_t t = i; t <= j; ++t) r[idx[t]] = avg;
        i = j + 1;
    }
    return r;
}

inline double spearman_rho(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("spearman_rho: need two equal-length series");
    auto rx = average_ranks(x);
    auto ry = average_ranks(y);
    double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / static_cast<double>(rx.size());
    double my = std::accumulate(ry.begin(), ry.end(), 0.0) / static_cast<double>(ry.size());
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        double dx = rx[i] - mx, dy = ry[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

// Mean with a normal-approximation 95% half-width, for profile tables.
struct RunningMean {
    double sum = 0.0;
    double sumsq = 0.0;
    long long n = 0;

    void add(double v) {
        sum += v;
        sumsq += v * v;
        ++n;
    }
    double mean() const { return n > 0 ? sum / static_cast<double>(n) : 0.0; }
    double half_width() const {
        if (n < 2) return 0.0;
        double m = mean();
        double var = (sumsq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1);
        return kZ95 * std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
    }
};

}  // namespace parkrelay
