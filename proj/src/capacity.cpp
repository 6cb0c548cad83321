#include "parkrelay/capacity.hpp"

#include <cmath>
#include <stdexcept>

#include "parkrelay/rng.hpp"
#include "parkrelay/specfun.hpp"
#include "parkrelay/stats.hpp"

namespace parkrelay {

namespace {

constexpr int kMaxClosedFormK = 32;
constexpr double kLn2 = 0.6931471805599453;

void check_k(int k) {
    if (k < 1) throw std::invalid_argument("sc_capacity: k must be >= 1");
    if (k > kMaxClosedFormK)
        throw std::domain_error("sc_capacity: closed form validated for k <= 32 only "
                                "(alternating-sum cancellation beyond)");
}

}  // namespace

double sc_snr_pdf(double gamma, double mu_bar, int k) {
    if (gamma < 0.0) return 0.0;
    if (!(mu_bar > 0.0)) throw std::domain_error("sc_snr_pdf: mu_bar must be > 0");
    if (k < 1) throw std::invalid_argument("sc_snr_pdf: k must be >= 1");
    double e = std::exp(-mu_bar * gamma);
    return static_cast<double>(k) * mu_bar * e * std::pow(1.0 - e, k - 1);
}

double sc_capacity(const RadioConfig& cfg, double mu_bar, int k) {
    if (!(mu_bar > 0.0)) throw std::domain_error("sc_capacity: mu_bar must be > 0");
    check_k(k);
    long double sum = 0.0L;
    long double binom = 1.0L;  // C(k-1, j), updated incrementally
    for (int j = 0; j < k; ++j) {
        long double term = binom * static_cast<long double>(
                                       expe1_scaled((j + 1) * mu_bar)) /
                           static_cast<long double>(j + 1);
        sum += (j % 2 == 0) ? term : -term;
        binom = binom * static_cast<long double>(k - 1 - j) / static_cast<long double>(j + 1);
    }
    return cfg.bandwidth * static_cast<double>(k) / (2.0 * kLn2) * static_cast<double>(sum);
}

double sc_capacity_shifted_index(const RadioConfig& cfg, double mu_bar, int k) {
    if (!(mu_bar > 0.0)) throw std::domain_error("sc_capacity: mu_bar must be > 0");
    check_k(k);
    long double sum = 0.0L;
    for (int i = 1; i < k; ++i) {  // C(k-1, i) = 0 at i = k, so that term drops
        long double binom = 1.0L;
        for (int t = 0; t < i; ++t)
            binom = binom * static_cast<long double>(k - 1 - t) / static_cast<long double>(t + 1);
        long double term = binom * static_cast<long double>(
                                       expe1_scaled((i + 1) * mu_bar)) /
                           static_cast<long double>(i + 1);
        sum += (i % 2 == 0) ? term : -term;
    }
    return cfg.bandwidth * static_cast<double>(k) / (2.0 * kLn2) * static_cast<double>(sum);
}

std::vector<double> surviving_relay_distribution(const std::vector<double>& p) {
    if (p.empty()) throw std::invalid_argument("surviving_relay_distribution: empty vector");
    for (double pi : p)
        if (pi < 0.0 || pi > 1.0)
            throw std::domain_error("surviving_relay_distribution: probabilities in [0,1]");
    std::vector<double> dist(p.size() + 1, 0.0);
    dist[0] = 1.0;
    std::size_t filled = 0;
    for (double pi : p) {
        ++filled;
        for (std::size_t j = filled; j >= 1; --j)
            dist[j] = dist[j] * (1.0 - pi) + dist[j - 1] * pi;
        dist[0] *= (1.0 - pi);
    }
    return dist;
}

double mu_bar_from(const RadioConfig& cfg) {
    if (cfg.p_s != cfg.p_ri)
        throw std::domain_error("capacity closed forms require identical branch statistics: "
                                "set p_ri equal to p_s");
    return cfg.n0 / cfg.p_s;
}

double adjusted_capacity(const RadioConfig& cfg, double mu_bar, const std::vector<double>& p) {
    std::vector<double> dist = surviving_relay_distribution(p);
    double c = 0.0;
    for (std::size_t k = 1; k < dist.size(); ++k)
        c += dist[k] * sc_capacity(cfg, mu_bar, static_cast<int>(k));
    return c;
}

std::vector<HourlyPoint> capacity_day_profile(const ParkingModel& model, const RadioConfig& cfg,
                                              const DayScenario& scenario) {
    constexpr int kFirst = 7, kLast = 22;
    double mu_bar = mu_bar_from(cfg);
    double c1 = sc_capacity(cfg, mu_bar, 1);

    std::vector<RunningMean> acc(kLast - kFirst + 1);
    for (int rep = 0; rep < scenario.replications; ++rep) {
        std::mt19937_64 g = substream(scenario.seed, static_cast<std::uint64_t>(rep));
        LotState lot = generate_day(model, scenario, g);
        for (int h = kFirst; h <= kLast; ++h) {
            std::vector<int> pool = present_at(lot, static_cast<double>(h));
            if (pool.empty()) continue;
            int pick = static_cast<int>(uniform01(g) * static_cast<double>(pool.size()));
            const CarRecord& car = lot.population[static_cast<std::size_t>(pool[pick])];
            double t_dur = static_cast<double>(h) - car.arrival_time;
            double pl = leave_probability(model.duration_table[car.arrival_hour], t_dur, cfg.tau);
            acc[static_cast<std::size_t>(h - kFirst)].add((1.0 - pl) * c1);
        }
    }

    std::vector<HourlyPoint> out;
    out.reserve(acc.size());
    for (int h = kFirst; h <= kLast; ++h) {
        const RunningMean& m = acc[static_cast<std::size_t>(h - kFirst)];
        if (m.n == 0)
            throw std::runtime_error("capacity_day_profile: no cars present at hour " +
                                     std::to_string(h) + " in any replication");
        out.push_back({h, m.mean(), m.half_width(), m.n, false});
    }
    return out;
}

}  // namespace parkrelay
