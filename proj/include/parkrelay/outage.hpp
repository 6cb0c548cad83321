#pragma once

// Closed-form outage: per-link SNR failure, combined SNR+departure link
// outage, and the K-relay select-combining system product.

#include <vector>

#include "parkrelay/channel.hpp"
#include "parkrelay/parking.hpp"

namespace parkrelay {

enum class CdfVariant { exact, approx };

// SNR-below-threshold probability. The contract form uses the exponential
// approximation; validation paths select the exact CDF to keep the
// analytic column unbiased against simulation (the approximation's model
// error dwarfs Monte Carlo noise on a dB sweep).
double snr_outage(const RadioConfig& cfg, const LinkRates& rates,
                  CdfVariant variant = CdfVariant::approx);

// 1 - (1 - p_gamma)(1 - p_leave): link fails on SNR outage or departure.
double link_outage(double p_gamma, double p_leave);

// Product over the cooperative set; independence by select combining.
double system_outage(const std::vector<double>& per_link);

struct SweepRow {
    double threshold_db = 0.0;
    int k = 0;
    double p_out_analytical = 0.0;
    double p_out_simulated = 0.0;  // filled by the simulation overlay
    double ci_halfwidth = 0.0;
};

// Analytical system outage for each threshold and each K-prefix of the
// relay list. Rows ordered threshold-major, K-minor. The simulated columns
// are left zero here; the fig2 command overlays them.
std::vector<SweepRow> outage_vs_threshold_sweep(const RadioConfig& cfg,
                                                const std::vector<Relay>& relays,
                                                const ParkingModel& model,
                                                const std::vector<double>& thresholds_db,
                                                const std::vector<int>& k_list,
                                                CdfVariant variant = CdfVariant::exact);

}  // namespace parkrelay
