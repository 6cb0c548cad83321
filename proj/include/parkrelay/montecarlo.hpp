#pragma once

// Simulation engine: whole-day parking-lot generation, trial-level outage
// estimation, daily profiles, and the two sensitivity sweeps.
//
// Determinism contract: every sampling entry point takes a seed (or an
// explicit stream); trial loops are partitioned into fixed-size chunks,
// chunk i drawing from substream(seed, i). Worker count changes scheduling
// only, never results.

#include <array>
#include <cstdint>
#include <vector>

#include "parkrelay/outage.hpp"

namespace parkrelay {

struct DayScenario {
    int lot_capacity = 500;
    int daily_cars = 2000;
    double current_time = 15.0;  // hour-of-day, 3:00 PM
    int replications = 1000;
    std::uint64_t seed = 42;
};

struct CarRecord {
    double arrival_time = 0.0;  // continuous hour-of-day
    int arrival_hour = 0;       // floor(arrival_time), keys the duration table
    double duration = 0.0;      // sampled parked duration, hours
};

struct LotState {
    std::vector<CarRecord> population;  // admitted cars, arrival order
    std::array<int, 24> arrivals{};     // admitted arrivals per hour
    // Departure histogram attributes each car to (arrival + duration) mod 24,
    // so the daily totals balance; occupancy tracks the true same-day
    // timeline and never goes negative. departures_same_day is the
    // timeline-consistent series the conservation invariant holds against.
    std::array<int, 24> departures{};
    std::array<int, 24> departures_same_day{};
    std::array<int, 24> occupancy{};  // end-of-hour headcount
    int admitted = 0;
    int rejected = 0;
};

struct TrialEstimate {
    double point = 0.0;
    double half_width = 0.0;
    long long n = 0;
};

// Samples daily_cars arrivals (truncated Weibull), a duration for each
// (dual-Gamma of its integer arrival hour), and admits them in time order
// against lot_capacity. Durations are sampled for rejected cars too, so the
// random stream layout does not depend on admission outcomes.
LotState generate_day(const ParkingModel& model, const DayScenario& scenario,
                      std::mt19937_64& g);

// Cars parked at time t (arrival <= t < departure); indices into population.
std::vector<int> present_at(const LotState& lot, double t);

// Per trial and relay: two fading gains and a departure Bernoulli; the trial
// is an outage iff every relay link fails (SNR below threshold or departed).
TrialEstimate estimate_outage(const std::vector<Relay>& relays, const ParkingModel& model,
                              const RadioConfig& cfg, long long trials,
                              std::uint64_t seed, int threads = 1);

enum class ProfileEstimator { analytic_sampled, empirical };

struct HourlyPoint {
    int hour = 0;
    double mean = 0.0;
    double ci_halfwidth = 0.0;
    long long samples = 0;
    bool skipped = false;  // population smaller than the relay draw all day
};

// Hours 7..22: sample the lot, draw k parked cars per hour, and either
// compose the closed forms on their profiles (analytic_sampled) or run a
// per-replication Bernoulli experiment (empirical).
std::vector<HourlyPoint> outage_day_profile(const ParkingModel& model, const RadioConfig& cfg,
                                            const DayScenario& scenario, int relays_per_hour,
                                            ProfileEstimator estimator,
                                            CdfVariant variant = CdfVariant::exact);

struct GridPoint {
    double x = 0.0;      // grid coordinate: minutes parked, or arrival hour
    double p_out = 0.0;  // closed-form link outage
};

// Outage vs elapsed parked time at a fixed arrival hour, single relay.
std::vector<GridPoint> tdur_sensitivity(const ParkingModel& model, const RadioConfig& cfg,
                                        int t_arr_hour, const std::vector<double>& tdur_minutes,
                                        CdfVariant variant = CdfVariant::exact);

// Outage vs arrival hour 0..23 at a fixed elapsed parked time, single relay.
std::vector<GridPoint> tarr_sensitivity(const ParkingModel& model, const RadioConfig& cfg,
                                        double t_dur_hours,
                                        CdfVariant variant = CdfVariant::exact);

// (max - min) / mean of the p_out column; the flatness metric the
// sensitivity comparison is stated in.
double relative_spread(const std::vector<GridPoint>& grid);

}  // namespace parkrelay
