#pragma once

// Select-combining ergodic capacity, the Poisson-binomial distribution of
// surviving relays, and the departure-adjusted capacity.

#include <vector>

#include "parkrelay/montecarlo.hpp"

namespace parkrelay {

// Density of the max of k iid exponential-CDF branch SNRs:
//   k mu e^{-mu g} (1 - e^{-mu g})^{k-1}.
double sc_snr_pdf(double gamma, double mu_bar, int k);

// Closed-form (B k / (2 ln 2)) sum_{j=0}^{k-1} (-1)^j C(k-1,j)
// e^{(j+1)mu} E1((j+1)mu) / (j+1). The summation index runs 0..k-1: the
// binomial expansion of (1 - e^{-mu g})^{k-1} starts at zero, and a 1..k
// index would make the k=1 capacity vanish instead of reducing to the
// classical (B/(2 ln 2)) e^{mu} E1(mu). The alternating sum limits k to 32
// before cancellation erodes the 1e-6 accuracy contract; larger k raises a
// domain error.
double sc_capacity(const RadioConfig& cfg, double mu_bar, int k);

// The 1..k-indexed variant, kept only so the validation suite can prove it
// fails the k=1 oracle. Never called by analysis paths.
double sc_capacity_shifted_index(const RadioConfig& cfg, double mu_bar, int k);

// Poisson-binomial law of the surviving-relay count: O(K^2) DP over the
// per-relay survival probabilities. Includes the k=0 (all depart) term.
std::vector<double> surviving_relay_distribution(const std::vector<double>& p);

// sum_k P{K'=k} sc_capacity(k); the K'=0 event contributes zero.
double adjusted_capacity(const RadioConfig& cfg, double mu_bar,
                         const std::vector<double>& p);

// mu_bar = N0/P_s, requiring p_ri == p_s (the closed form needs iid
// branches); heterogeneous powers raise a domain error.
double mu_bar_from(const RadioConfig& cfg);

// Hours 7..22: per replication sample the lot, pick one parked car
// uniformly, and record its departure-adjusted single-relay capacity.
std::vector<HourlyPoint> capacity_day_profile(const ParkingModel& model, const RadioConfig& cfg,
                                              const DayScenario& scenario);

}  // namespace parkrelay
