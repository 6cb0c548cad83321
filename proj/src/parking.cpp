#include "parkrelay/parking.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "parkrelay/rng.hpp"
#include "parkrelay/specfun.hpp"

namespace parkrelay {

double arrival_pdf(const WeibullArrival& model, double t) {
    if (t < 0.0) throw std::domain_error("arrival_pdf: negative time");
    if (t == 0.0) return model.alpha >= 1.0 ? (model.alpha == 1.0 ? 1.0 / model.beta : 0.0)
                                            : std::numeric_limits<double>::infinity();
    double z = t / model.beta;
    return model.alpha / model.beta * std::pow(z, model.alpha - 1.0) *
           std::exp(-std::pow(z, model.alpha));
}

double arrival_cdf(const WeibullArrival& model, double t) {
    if (t <= 0.0) return 0.0;
    return -std::expm1(-std::pow(t / model.beta, model.alpha));
}

double sample_arrival(const WeibullArrival& model, std::mt19937_64& g) {
    double f24 = arrival_cdf(model, 24.0);
    double u = uniform01(g) * f24;
    return model.beta * std::pow(-std::log1p(-u), 1.0 / model.alpha);
}

double duration_pdf(const DualGammaHourParams& p, double x) {
    if (x <= 0.0) throw std::domain_error("duration_pdf: requires x > 0");
    auto component = [x](double kappa, double theta) {
        return std::exp((kappa - 1.0) * std::log(x) - x / theta -
                        std::lgamma(kappa) - kappa * std::log(theta));
    };
    return p.d1 * component(p.kappa_s, p.theta_s) + p.d2 * component(p.kappa_l, p.theta_l);
}

double duration_cdf(const DualGammaHourParams& p, double x) {
    if (x <= 0.0) return 0.0;
    return p.d1 * (1.0 - regularized_gamma_q(p.kappa_s, x / p.theta_s)) +
           p.d2 * (1.0 - regularized_gamma_q(p.kappa_l, x / p.theta_l));
}

namespace {

// Mixture tail P[X > u], the shared numerator/denominator of Eq. 7's ratio.
double mixture_tail(const DualGammaHourParams& p, double u) {
    if (u <= 0.0) return p.d1 + p.d2;
    return p.d1 * regularized_gamma_q(p.kappa_s, u / p.theta_s) +
           p.d2 * regularized_gamma_q(p.kappa_l, u / p.theta_l);
}

}  // namespace

double survival_probability(const DualGammaHourParams& p, double t_a, double n) {
    if (t_a < 0.0) throw std::domain_error("survival_probability: t_a < 0");
    if (n < 0.0) throw std::domain_error("survival_probability: n < 0");
    double denom = mixture_tail(p, t_a);
    if (denom < 1e-300)
        throw std::domain_error("survival_probability: conditioning event numerically extinct");
    if (n == 0.0) return 1.0;
    double s = mixture_tail(p, t_a + n) / denom;
    return std::clamp(s, 0.0, 1.0);
}

double leave_probability(const DualGammaHourParams& p, double t_dur, double tau) {
    if (tau <= 0.0) throw std::domain_error("leave_probability: tau must be > 0");
    return 1.0 - survival_probability(p, t_dur, tau);
}

double sample_duration(const DualGammaHourParams& p, std::mt19937_64& g) {
    bool take_long = uniform01(g) < p.d2;
    if (take_long) return gamma_sample(g, p.kappa_l, p.theta_l);
    return gamma_sample(g, p.kappa_s, p.theta_s);
}

namespace {

double require_positive(const nlohmann::json& rec, const char* field, const std::string& ctx) {
    if (!rec.contains(field))
        throw TableError("parking table: " + ctx + "." + field + ": missing");
    if (!rec[field].is_number())
        throw TableError("parking table: " + ctx + "." + field + ": not a number");
    double v = rec[field].get<double>();
    if (!(v > 0.0))
        throw TableError("parking table: " + ctx + "." + field + ": must be > 0");
    return v;
}

double require_weight(const nlohmann::json& rec, const char* field, const std::string& ctx) {
    if (!rec.contains(field))
        throw TableError("parking table: " + ctx + "." + field + ": missing");
    if (!rec[field].is_number())
        throw TableError("parking table: " + ctx + "." + field + ": not a number");
    double v = rec[field].get<double>();
    if (v < 0.0)
        throw TableError("parking table: " + ctx + "." + field + ": must be >= 0");
    return v;
}

}  // namespace

ParkingModel load_parking_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TableError("parking table: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw TableError("parking table: " + path + ": " + e.what());
    }

    ParkingModel model;
    if (!doc.contains("weibull"))
        throw TableError("parking table: weibull: missing record");
    model.arrival.alpha = require_positive(doc["weibull"], "alpha", "weibull");
    model.arrival.beta = require_positive(doc["weibull"], "beta", "weibull");

    if (!doc.contains("hours") || !doc["hours"].is_array() || doc["hours"].size() != 24)
        throw TableError("parking table: hours: need exactly 24 records");

    std::array<bool, 24> seen{};
    for (const auto& rec : doc["hours"]) {
        if (!rec.contains("hour") || !rec["hour"].is_number_integer())
            throw TableError("parking table: hours[]: missing integer hour");
        int h = rec["hour"].get<int>();
        if (h < 0 || h > 23)
            throw TableError("parking table: hours[].hour: " + std::to_string(h) + " out of range");
        if (seen[h])
            throw TableError("parking table: hours[].hour: " + std::to_string(h) + " duplicated");
        seen[h] = true;
        std::string ctx = "hours[" + std::to_string(h) + "]";
        DualGammaHourParams& p = model.duration_table[h];
        p.kappa_s = require_positive(rec, "kappa_s", ctx);
        p.theta_s = require_positive(rec, "theta_s", ctx);
        p.kappa_l = require_positive(rec, "kappa_l", ctx);
        p.theta_l = require_positive(rec, "theta_l", ctx);
        p.d1 = require_weight(rec, "d1", ctx);
        p.d2 = require_weight(rec, "d2", ctx);
        if (std::fabs(p.d1 + p.d2 - 1.0) > 1e-9)
            throw TableError("parking table: " + ctx + ".d1/d2: weights sum to " +
                             std::to_string(p.d1 + p.d2) + ", must be 1");
    }
    return model;
}

ParkingModel builtin_synthetic_table() {
    ParkingModel model;
    model.arrival = {0.9831, 16.8};
    constexpr double d2_by_hour[24] = {
        0.30, 0.30, 0.30, 0.30, 0.30, 0.30,  // overnight
        0.55, 0.75, 0.90, 0.90, 0.90, 0.70,  // morning commute
        0.55, 0.45, 0.35, 0.25, 0.20, 0.18,  // afternoon decline
        0.15, 0.15, 0.18, 0.22, 0.28, 0.30,  // evening
    };
    constexpr double theta_l_by_hour[24] = {
        0.80, 0.80, 0.80, 0.80, 0.80, 0.80,
        1.00, 1.00, 1.00, 1.00, 1.00, 0.90,
        0.80, 0.70, 0.60, 0.50, 0.45, 0.45,
        0.45, 0.45, 0.45, 0.45, 0.45, 0.45,
    };
    for (int h = 0; h < 24; ++h) {
        DualGammaHourParams& p = model.duration_table[h];
        p.kappa_s = 2.0;
        p.theta_s = 0.75;
        p.kappa_l = 9.0;
        p.theta_l = theta_l_by_hour[h];
        p.d2 = d2_by_hour[h];
        p.d1 = 1.0 - p.d2;
    }
    return model;
}

ParkingModel exponential_control_table() {
    ParkingModel model;
    model.arrival = {0.9831, 16.8};
    for (auto& p : model.duration_table) p = {1.0, 2.0, 1.0, 2.0, 0.5, 0.5};
    return model;
}

}  // namespace parkrelay
