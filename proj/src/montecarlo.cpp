#include "parkrelay/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <thread>

#include "parkrelay/rng.hpp"
#include "parkrelay/stats.hpp"

namespace parkrelay {

LotState generate_day(const ParkingModel& model, const DayScenario& scenario,
                      std::mt19937_64& g) {
    if (scenario.lot_capacity <= 0) throw std::invalid_argument("generate_day: lot_capacity");
    if (scenario.daily_cars < 0) throw std::invalid_argument("generate_day: daily_cars");

    std::vector<double> times(static_cast<std::size_t>(scenario.daily_cars));
    for (double& t : times) t = sample_arrival(model.arrival, g);
    std::sort(times.begin(), times.end());

    LotState lot;
    lot.population.reserve(times.size());
    std::priority_queue<double, std::vector<double>, std::greater<>> parked_until;
    for (double t_arr : times) {
        int hour = std::min(static_cast<int>(t_arr), 23);
        double dur = sample_duration(model.duration_table[hour], g);
        while (!parked_until.empty() && parked_until.top() <= t_arr) parked_until.pop();
        if (static_cast<int>(parked_until.size()) >= scenario.lot_capacity) {
            ++lot.rejected;
            continue;
        }
        parked_until.push(t_arr + dur);
        lot.population.push_back({t_arr, hour, dur});
        ++lot.admitted;
        ++lot.arrivals[hour];
        double t_dep = t_arr + dur;
        lot.departures[static_cast<int>(t_dep) % 24] += 1;
        if (t_dep < 24.0) ++lot.departures_same_day[static_cast<int>(t_dep)];
    }

    for (int h = 0; h < 24; ++h) {
        double boundary = static_cast<double>(h + 1);
        int count = 0;
        for (const CarRecord& car : lot.population)
            if (car.arrival_time < boundary && car.arrival_time + car.duration >= boundary)
                ++count;
        lot.occupancy[h] = count;
    }
    return lot;
}

std::vector<int> present_at(const LotState& lot, double t) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < lot.population.size(); ++i) {
        const CarRecord& car = lot.population[i];
        if (car.arrival_time <= t && t < car.arrival_time + car.duration)
            idx.push_back(static_cast<int>(i));
    }
    return idx;
}

namespace {

constexpr long long kChunkTrials = 1 << 16;

// Runs fn(chunk_index, chunk_stream, chunk_trials) over all chunks with the
// requested worker count. fn must write only chunk-local state.
template <typename Fn>
void run_chunked(long long trials, std::uint64_t seed, int threads, Fn&& fn) {
    long long n_chunks = (trials + kChunkTrials - 1) / kChunkTrials;
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            long long c = next.fetch_add(1);
            if (c >= n_chunks) return;
            long long count = std::min(kChunkTrials, trials - c * kChunkTrials);
            std::mt19937_64 g = substream(seed, static_cast<std::uint64_t>(c));
            fn(c, g, count);
        }
    };
    int n_workers = std::max(1, threads);
    if (n_workers == 1 || n_chunks == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace

TrialEstimate estimate_outage(const std::vector<Relay>& relays, const ParkingModel& model,
                              const RadioConfig& cfg, long long trials,
                              std::uint64_t seed, int threads) {
    if (relays.empty()) throw std::invalid_argument("estimate_outage: no relays");
    if (trials < 1) throw std::invalid_argument("estimate_outage: trials < 1");

    std::vector<double> p_leave(relays.size());
    for (std::size_t i = 0; i < relays.size(); ++i)
        p_leave[i] = leave_probability(model.duration_table[relays[i].arrival_hour],
                                       relays[i].elapsed_parked, cfg.tau);

    long long n_chunks = (trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<long long> counts(static_cast<std::size_t>(n_chunks), 0);
    run_chunked(trials, seed, threads, [&](long long c, std::mt19937_64& g, long long n) {
        long long outages = 0;
        for (long long t = 0; t < n; ++t) {
            bool all_failed = true;
            for (std::size_t i = 0; i < relays.size(); ++i) {
                double g1 = sample_channel_gain(g);
                double g2 = sample_channel_gain(g);
                double u = uniform01(g);
                bool failed = link_snr(g1, g2, cfg) < cfg.gamma_th || u < p_leave[i];
                all_failed = all_failed && failed;
            }
            outages += all_failed ? 1 : 0;
        }
        counts[static_cast<std::size_t>(c)] = outages;
    });

    long long total = 0;
    for (long long c : counts) total += c;
    BinomialEstimate est = binomial_estimate(total, trials);
    return {est.p, est.half_width, est.n};
}

namespace {

constexpr int kProfileFirstHour = 7;
constexpr int kProfileLastHour = 22;

// Draw k distinct indices from pool (partial Fisher-Yates on a copy).
std::vector<int> draw_distinct(std::vector<int> pool, int k, std::mt19937_64& g) {
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(uniform01(g) * static_cast<double>(pool.size() - i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return pool;
}

}  // namespace

std::vector<HourlyPoint> outage_day_profile(const ParkingModel& model, const RadioConfig& cfg,
                                            const DayScenario& scenario, int relays_per_hour,
                                            ProfileEstimator estimator, CdfVariant variant) {
    if (relays_per_hour < 1) throw std::invalid_argument("outage_day_profile: k < 1");
    LinkRates rates = link_rates(cfg);
    double p_gamma = snr_outage(cfg, rates, variant);

    const int hours = kProfileLastHour - kProfileFirstHour + 1;
    std::vector<RunningMean> acc(static_cast<std::size_t>(hours));
    for (int rep = 0; rep < scenario.replications; ++rep) {
        std::mt19937_64 g = substream(scenario.seed, static_cast<std::uint64_t>(rep));
        LotState lot = generate_day(model, scenario, g);
        for (int h = kProfileFirstHour; h <= kProfileLastHour; ++h) {
            std::vector<int> pool = present_at(lot, static_cast<double>(h));
            if (static_cast<int>(pool.size()) < relays_per_hour) continue;
            std::vector<int> chosen = draw_distinct(std::move(pool), relays_per_hour, g);
            double value = 0.0;
            if (estimator == ProfileEstimator::analytic_sampled) {
                std::vector<double> links;
                links.reserve(chosen.size());
                for (int idx : chosen) {
                    const CarRecord& car = lot.population[static_cast<std::size_t>(idx)];
                    double t_dur = static_cast<double>(h) - car.arrival_time;
                    double pl = leave_probability(model.duration_table[car.arrival_hour],
                                                  t_dur, cfg.tau);
                    links.push_back(link_outage(p_gamma, pl));
                }
                value = system_outage(links);
            } else {
                bool all_failed = true;
                for (int idx : chosen) {
                    const CarRecord& car = lot.population[static_cast<std::size_t>(idx)];
                    double t_dur = static_cast<double>(h) - car.arrival_time;
                    double pl = leave_probability(model.duration_table[car.arrival_hour],
                                                  t_dur, cfg.tau);
                    double g1 = sample_channel_gain(g);
                    double g2 = sample_channel_gain(g);
                    bool failed = link_snr(g1, g2, cfg) < cfg.gamma_th || uniform01(g) < pl;
                    all_failed = all_failed && failed;
                }
                value = all_failed ? 1.0 : 0.0;
            }
            acc[static_cast<std::size_t>(h - kProfileFirstHour)].add(value);
        }
    }

    std::vector<HourlyPoint> out;
    out.reserve(static_cast<std::size_t>(hours));
    for (int h = kProfileFirstHour; h <= kProfileLastHour; ++h) {
        const RunningMean& m = acc[static_cast<std::size_t>(h - kProfileFirstHour)];
        out.push_back({h, m.mean(), m.half_width(), m.n, m.n == 0});
    }
    return out;
}

std::vector<GridPoint> tdur_sensitivity(const ParkingModel& model, const RadioConfig& cfg,
                                        int t_arr_hour, const std::vector<double>& tdur_minutes,
                                        CdfVariant variant) {
    if (t_arr_hour < 0 || t_arr_hour > 23)
        throw std::invalid_argument("tdur_sensitivity: arrival hour out of range");
    LinkRates rates = link_rates(cfg);
    double p_gamma = snr_outage(cfg, rates, variant);
    const DualGammaHourParams& params = model.duration_table[t_arr_hour];
    std::vector<GridPoint> out;
    out.reserve(tdur_minutes.size());
    for (double minutes : tdur_minutes) {
        double pl = leave_probability(params, minutes / 60.0, cfg.tau);
        out.push_back({minutes, link_outage(p_gamma, pl)});
    }
    return out;
}

std::vector<GridPoint> tarr_sensitivity(const ParkingModel& model, const RadioConfig& cfg,
                                        double t_dur_hours, CdfVariant variant) {
    if (t_dur_hours < 0.0) throw std::invalid_argument("tarr_sensitivity: t_dur < 0");
    LinkRates rates = link_rates(cfg);
    double p_gamma = snr_outage(cfg, rates, variant);
    std::vector<GridPoint> out;
    out.reserve(24);
    for (int h = 0; h < 24; ++h) {
        double pl = leave_probability(model.duration_table[h], t_dur_hours, cfg.tau);
        out.push_back({static_cast<double>(h), link_outage(p_gamma, pl)});
    }
    return out;
}

double relative_spread(const std::vector<GridPoint>& grid) {
    if (grid.empty()) throw std::invalid_argument("relative_spread: empty grid");
    double lo = grid.front().p_out, hi = lo, sum = 0.0;
    for (const GridPoint& p : grid) {
        lo = std::min(lo, p.p_out);
        hi = std::max(hi, p.p_out);
        sum += p.p_out;
    }
    double mean = sum / static_cast<double>(grid.size());
    return mean > 0.0 ? (hi - lo) / mean : 0.0;
}

}  // namespace parkrelay
