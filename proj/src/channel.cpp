#include "parkrelay/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "parkrelay/rng.hpp"
#include "parkrelay/specfun.hpp"

namespace parkrelay {

LinkRates link_rates(const RadioConfig& cfg) {
    if (!(cfg.p_s > 0.0) || !(cfg.p_ri > 0.0) || !(cfg.n0 > 0.0))
        throw std::domain_error("link_rates: powers and noise must be > 0");
    LinkRates r;
    r.w_sri = cfg.n0 / (2.0 * cfg.p_s);
    r.w_rid = cfg.n0 / (2.0 * cfg.p_ri);
    r.mu = r.w_sri + r.w_rid;
    return r;
}

double link_snr(double gain_sr, double gain_rd, const RadioConfig& cfg) {
    if (gain_sr < 0.0 || gain_rd < 0.0)
        throw std::domain_error("link_snr: negative channel gain");
    double x = cfg.p_s * gain_sr / cfg.n0;
    double y = cfg.p_ri * gain_rd / cfg.n0;
    return x * y / (1.0 + x + y);
}

double sample_channel_gain(std::mt19937_64& g) {
    return exponential_sample(g, 2.0);
}

double snr_cdf_exact(double x, const LinkRates& rates) {
    if (x < 0.0) throw std::domain_error("snr_cdf_exact: negative SNR");
    if (x == 0.0) return 0.0;
    double z = 2.0 * std::sqrt(x * (x + 1.0) * rates.w_sri * rates.w_rid);
    if (z > 710.0) return 1.0;
    double f = 1.0 - z * std::exp(-x * rates.mu) * bessel_k1(z);
    return f < 0.0 ? 0.0 : (f > 1.0 ? 1.0 : f);
}

double snr_cdf_approx(double x, double mu) {
    if (x < 0.0) throw std::domain_error("snr_cdf_approx: negative SNR");
    if (!(mu > 0.0)) throw std::domain_error("snr_cdf_approx: mu must be > 0");
    return -std::expm1(-mu * x);
}

}  // namespace parkrelay
