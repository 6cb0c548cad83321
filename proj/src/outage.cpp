#include "parkrelay/outage.hpp"

#include <cmath>
#include <stdexcept>

namespace parkrelay {

double snr_outage(const RadioConfig& cfg, const LinkRates& rates, CdfVariant variant) {
    if (cfg.gamma_th == 0.0) return 0.0;
    if (variant == CdfVariant::exact) return snr_cdf_exact(cfg.gamma_th, rates);
    return snr_cdf_approx(cfg.gamma_th, rates.mu);
}

double link_outage(double p_gamma, double p_leave) {
    if (p_gamma < 0.0 || p_gamma > 1.0 || p_leave < 0.0 || p_leave > 1.0)
        throw std::domain_error("link_outage: probabilities must lie in [0,1]");
    return 1.0 - (1.0 - p_gamma) * (1.0 - p_leave);
}

double system_outage(const std::vector<double>& per_link) {
    if (per_link.empty())
        throw std::invalid_argument("system_outage: empty cooperative set");
    double prod = 1.0;
    for (double p : per_link) {
        if (p < 0.0 || p > 1.0)
            throw std::domain_error("system_outage: probabilities must lie in [0,1]");
        prod *= p;
    }
    return prod;
}

std::vector<SweepRow> outage_vs_threshold_sweep(const RadioConfig& cfg,
                                                const std::vector<Relay>& relays,
                                                const ParkingModel& model,
                                                const std::vector<double>& thresholds_db,
                                                const std::vector<int>& k_list,
                                                CdfVariant variant) {
    if (relays.empty())
        throw std::invalid_argument("outage_vs_threshold_sweep: need at least one relay");
    for (int k : k_list)
        if (k < 1 || static_cast<std::size_t>(k) > relays.size())
            throw std::invalid_argument("outage_vs_threshold_sweep: K exceeds relay list");

    std::vector<double> p_leave(relays.size());
    for (std::size_t i = 0; i < relays.size(); ++i) {
        const Relay& r = relays[i];
        p_leave[i] = leave_probability(model.duration_table[r.arrival_hour],
                                       r.elapsed_parked, cfg.tau);
    }

    std::vector<SweepRow> rows;
    rows.reserve(thresholds_db.size() * k_list.size());
    for (double th_db : thresholds_db) {
        RadioConfig at = cfg;
        at.gamma_th = std::pow(10.0, th_db / 10.0);
        LinkRates rates = link_rates(at);
        double p_gamma = snr_outage(at, rates, variant);
        for (int k : k_list) {
            std::vector<double> links(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) links[i] = link_outage(p_gamma, p_leave[i]);
            rows.push_back({th_db, k, system_outage(links), 0.0, 0.0});
        }
    }
    return rows;
}

}  // namespace parkrelay
