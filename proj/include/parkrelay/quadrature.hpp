#pragma once

// Double-exponential (tanh-sinh / exp-sinh) quadrature.
//
// This is the independent oracle the test suite measures every closed form
// against, so it deliberately calls nothing else in this library. Both rules
// handle integrable endpoint singularities, which the model needs (the
// Weibull density diverges at 0 for shape < 1).

#include <cmath>
#include <cstdlib>

namespace parkrelay {

// Integral of f over the finite interval [a, b].
// Halves the step until two refinements agree to target_rel.
template <typename F>
double integrate_finite(F&& f, double a, double b, double target_rel = 1e-12) {
    const double half = 0.5 * (b - a);
    const double pi2 = 1.5707963267948966;
    const double tmax = 6.11;  // abscissas reach the endpoints to double precision

    // Nodes are placed by their distance from the nearer endpoint,
    // delta = half * (1 - tanh(w)) evaluated as 2 e^{-2w} half / (1 + e^{-2w}),
    // which keeps full relative precision where naive mid + half*tanh(w)
    // cancels; integrable singularities at `a` stay accurate.
    auto eval_pair = [&](double t) -> double {
        double w = pi2 * std::sinh(t);
        double em = std::exp(-2.0 * w);
        double delta = 2.0 * em * half / (1.0 + em);
        double weight = half * pi2 * std::cosh(t) * 4.0 * em / ((1.0 + em) * (1.0 + em));
        if (!(weight > 0.0) || !std::isfinite(weight) || delta <= 0.0) return 0.0;
        double acc = 0.0;
        double lo = a + delta;
        if (lo > a && lo < b) {
            double v = f(lo);
            if (std::isfinite(v)) acc += v * weight;
        }
        double hi = b - delta;
        if (t > 0.0 && hi > a && hi < b) {
            double v = f(hi);
            if (std::isfinite(v)) acc += v * weight;
        }
        return acc;
    };

    double h = 1.0;
    double sum = eval_pair(0.0);
    for (double t = h; t <= tmax; t += h) sum += eval_pair(t);
    double prev = sum * h;

    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) add += eval_pair(t);
        double cur = prev * 0.5 + add * h;
        if (level >= 3 && std::fabs(cur - prev) <= target_rel * std::fabs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

// Integral of f over [a, inf).
template <typename F>
double integrate_to_infinity(F&& f, double a, double target_rel = 1e-12) {
    const double pi2 = 1.5707963267948966;
    const double tmax = 6.0;

    auto eval_at = [&](double t) -> double {
        double e = pi2 * std::sinh(t);
        if (e > 700.0) return 0.0;  // abscissa beyond double range
        double g = std::exp(e);
        double x = a + g;
        double w = pi2 * std::cosh(t) * g;
        if (!std::isfinite(x) || !std::isfinite(w)) return 0.0;
        double fx = f(x);
        return std::isfinite(fx) ? fx * w : 0.0;
    };

    double h = 1.0;
    double sum = eval_at(0.0);
    for (double t = h; t <= tmax; t += h) sum += eval_at(t) + eval_at(-t);
    double prev = sum * h;

    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) add += eval_at(t) + eval_at(-t);
        double cur = prev * 0.5 + add * h;
        if (level >= 3 && std::fabs(cur - prev) <= target_rel * std::fabs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace parkrelay
