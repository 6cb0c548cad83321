#pragma once

// Stochastic model of parked-car behavior: Weibull arrival hour, dual-Gamma
// parked duration keyed to the integer arrival hour, and the conditional
// survival/leave probabilities a relay's reliability derives from.

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace parkrelay {

struct WeibullArrival {
    double alpha = 0.9831;  // shape
    double beta = 16.8;     // scale, hours
};

struct DualGammaHourParams {
    double kappa_s = 1.0;  // short-stay shape
    double theta_s = 1.0;  // short-stay scale, hours
    double kappa_l = 1.0;  // long-stay shape
    double theta_l = 1.0;  // long-stay scale, hours
    double d1 = 0.5;       // short-stay weight
    double d2 = 0.5;       // long-stay weight; d1 + d2 must be 1
};

struct ParkingModel {
    WeibullArrival arrival;
    std::array<DualGammaHourParams, 24> duration_table{};
};

// One parked car as the analytical paths see it. planned_duration is
// simulation ground truth only; closed forms never read it.
struct Relay {
    int arrival_hour = 0;         // integer hour 0..23
    double elapsed_parked = 0.0;  // hours since arrival (t_cur - t_arr)
    double planned_duration = 0.0;
};

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weibull density. Diverges as t -> 0+ for alpha < 1; callers sample via the
// inverse CDF and never evaluate at exactly 0.
double arrival_pdf(const WeibullArrival& model, double t);
double arrival_cdf(const WeibullArrival& model, double t);

// Inverse-CDF sample truncated and renormalized to [0, 24). The untruncated
// distribution puts ~24% of its mass past 24h, so renormalization is explicit.
double sample_arrival(const WeibullArrival& model, std::mt19937_64& g);

// Two-component gamma mixture density; integrates to d1 + d2.
double duration_pdf(const DualGammaHourParams& params, double x);
// Mixture CDF (regularized lower incomplete gammas).
double duration_cdf(const DualGammaHourParams& params, double x);

// P[X > t_a + n | X > t_a]: probability a car parked t_a hours keeps at
// least n more. Computed from the upper-tail form of the incomplete-gamma
// ratio, which is algebraically identical to the printed lower-gamma ratio
// but avoids cancellation deep in the tail.
double survival_probability(const DualGammaHourParams& params, double t_a, double n);

// 1 - survival over the communication window tau.
double leave_probability(const DualGammaHourParams& params, double t_dur, double tau);

// Mixture component chosen with probability (d1, d2), then a gamma variate.
double sample_duration(const DualGammaHourParams& params, std::mt19937_64& g);

// Table file: {"weibull": {...}, "hours": [24 records]}. Throws TableError
// naming the offending field. d1 + d2 must equal 1 within 1e-9.
ParkingModel load_parking_table(const std::string& path);

// The shipped synthetic table (data/parking_synthetic.json mirrors this):
// short stays Gamma(2, 0.75h); long stays Gamma(9, theta_l) with theta_l
// tapering from 1.0h for morning arrivals to 0.45h for evening ones; the
// long-stay weight peaks at 0.90 for 8:00-10:00 arrivals. Synthetic values,
// not fitted to any dataset.
ParkingModel builtin_synthetic_table();

// Memoryless control: every hour exponential with the same mean. Leave
// probability is then independent of elapsed time, the null against which
// the dual-Gamma's elapsed-time dependence is measured.
ParkingModel exponential_control_table();

}  // namespace parkrelay
