#pragma once

// Self-check suite: every closed form in the library measured against an
// independent oracle (quadrature of the defining integral, brute-force
// enumeration, or Monte Carlo). Shared by the `validate` subcommand and the
// acceptance test binary; each check returns what it measured and the bound
// it was held to, so failures print with numbers attached.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "parkrelay/config.hpp"

namespace parkrelay {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;  // worst observed error / statistic
    double limit = 0.0;     // bound it was compared against
    std::string detail;
};

// Special-function kernels vs quadrature of their defining integrals,
// 100 log-spaced points per function, 1e-9 relative.
std::vector<CheckResult> check_specfun_oracle();
// Lower + upper incomplete gamma reassemble the complete gamma, 1e-10.
CheckResult check_gamma_identity();

// Select-combining capacity closed form vs quadrature of
// (B/2) integral log2(1+g) f(g) dg, k in 1..8, mu in {1e-3..1}, 1e-6.
CheckResult check_capacity_oracle();
// k=1 must reduce to (B/(2 ln 2)) e^mu E1(mu).
CheckResult check_capacity_single_relay_form();
// The plausible-but-wrong 1..k summation index must FAIL the k=1 oracle;
// proves the suite would catch that regression.
CheckResult check_capacity_misindex_detected();

// Surviving-relay DP vs subset enumeration, K <= 12, 100 random instances,
// 1e-12; plus normalization to 1 within 1e-10 up to K = 64.
CheckResult check_survivor_dp_oracle(std::uint64_t seed);
CheckResult check_survivor_dp_normalization(std::uint64_t seed);

// Conditional parked-duration survival vs quadrature tail ratios over a
// 24 x 20 x 20 (hour, t_a, n) grid, 1e-7; and survival(., ., 0) = 1.
CheckResult check_survival_oracle();
CheckResult check_survival_at_zero();

// Exact two-hop SNR CDF vs the empirical CDF of sampled end-to-end SNR
// (KS test, p > 0.01 at `draws` samples).
CheckResult check_snr_cdf_ks(std::uint64_t seed, std::size_t draws);
// Exponential-approximation gap shrinks monotonically across four decades
// of mean per-hop SNR on the 0..20 dB threshold grid.
CheckResult check_cdf_gap_monotone();
// Frozen regression bound on the approximation gap in the operating regime.
CheckResult check_cdf_gap_bound();

// A table file with d1 + d2 != 1 must be rejected at load.
CheckResult check_table_tamper_rejected();

// Analytical threshold sweep vs Monte Carlo, |diff| <= max(3 sigma, 0.005)
// per point over thresholds x k_list at `trials` trials.
CheckResult check_outage_agreement(const RunConfig& cfg, const std::vector<double>& thresholds_db,
                                   const std::vector<int>& k_list, long long trials);

// Day-shape properties on the shipped synthetic table: arrival peak before
// departure peak; outage minimum strictly inside (8, 16) with the 19-21h
// mean above the 9-11h mean; capacity profile anti-correlated with outage.
std::vector<CheckResult> check_day_profiles(const RunConfig& cfg);

// Arrival-hour spread at least 5x the parked-duration spread; the
// exponential-degenerate control table exactly flat in duration; frozen
// duration-spread regression value.
std::vector<CheckResult> check_sensitivity(const RunConfig& cfg);

// estimate_outage must return bit-identical estimates for any worker count.
CheckResult check_estimator_determinism(const RunConfig& cfg);

// Everything above with config-derived trial counts (the acceptance binary
// re-runs the heavy checks with its own pinned counts).
std::vector<CheckResult> run_validation_suite(const RunConfig& cfg);

// Prints one [PASS]/[FAIL] line per result; returns the failure count.
int print_report(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace parkrelay
