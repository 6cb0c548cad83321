#include "parkrelay/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <thread>

#include <json.hpp>

#include "parkrelay/csvio.hpp"

namespace parkrelay {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw ConfigError("config: " + path + ": " + why);
}

void check_keys(const json& obj, const std::string& path, std::set<std::string> allowed) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) fail(path + "." + key, "unknown key");
}

double get_number(const json& obj, const std::string& path, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) fail(path + "." + key, "not a number");
    return obj[key].get<double>();
}

long long get_integer(const json& obj, const std::string& path, const char* key, long long fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer()) fail(path + "." + key, "not an integer");
    return obj[key].get<long long>();
}

std::string get_string(const json& obj, const std::string& path, const char* key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_string()) fail(path + "." + key, "not a string");
    return obj[key].get<std::string>();
}

void require_positive(double v, const std::string& path) {
    if (!(v > 0.0)) fail(path, "must be > 0");
}

}  // namespace

RunConfig default_config() { return {}; }

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ConfigError("config: " + path + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: " + path + ": not a JSON object");

    check_keys(doc, "$", {"radio", "parking_table_path", "scenario", "threads", "out_dir",
                          "fig2", "fig4", "fig5", "fig6"});
    RunConfig cfg;

    if (doc.contains("radio")) {
        const json& r = doc["radio"];
        check_keys(r, "radio", {"p_s", "p_ri", "n0", "gamma_th_db", "bandwidth_hz", "tau_hours"});
        cfg.radio.p_s = get_number(r, "radio", "p_s", cfg.radio.p_s);
        cfg.radio.p_ri = get_number(r, "radio", "p_ri", cfg.radio.p_ri);
        cfg.radio.n0 = get_number(r, "radio", "n0", cfg.radio.n0);
        double db = get_number(r, "radio", "gamma_th_db", 10.0 * std::log10(cfg.radio.gamma_th));
        cfg.radio.gamma_th = std::pow(10.0, db / 10.0);
        cfg.radio.bandwidth = get_number(r, "radio", "bandwidth_hz", cfg.radio.bandwidth);
        cfg.radio.tau = get_number(r, "radio", "tau_hours", cfg.radio.tau);
        require_positive(cfg.radio.p_s, "radio.p_s");
        require_positive(cfg.radio.p_ri, "radio.p_ri");
        require_positive(cfg.radio.n0, "radio.n0");
        require_positive(cfg.radio.bandwidth, "radio.bandwidth_hz");
        require_positive(cfg.radio.tau, "radio.tau_hours");
    }

    cfg.parking_table_path = get_string(doc, "$", "parking_table_path", cfg.parking_table_path);
    cfg.out_dir = get_string(doc, "$", "out_dir", cfg.out_dir);
    if (cfg.out_dir.empty()) fail("out_dir", "must not be empty");
    cfg.threads = static_cast<int>(get_integer(doc, "$", "threads", cfg.threads));
    if (cfg.threads < 0) fail("threads", "must be >= 0 (0 = hardware)");

    if (doc.contains("scenario")) {
        const json& s = doc["scenario"];
        check_keys(s, "scenario",
                   {"lot_capacity", "daily_cars", "current_time", "replications", "seed"});
        cfg.scenario.lot_capacity =
            static_cast<int>(get_integer(s, "scenario", "lot_capacity", cfg.scenario.lot_capacity));
        cfg.scenario.daily_cars =
            static_cast<int>(get_integer(s, "scenario", "daily_cars", cfg.scenario.daily_cars));
        cfg.scenario.current_time = get_number(s, "scenario", "current_time", cfg.scenario.current_time);
        cfg.scenario.replications =
            static_cast<int>(get_integer(s, "scenario", "replications", cfg.scenario.replications));
        if (s.contains("seed")) {
            if (!s["seed"].is_number_unsigned() && !s["seed"].is_number_integer())
                fail("scenario.seed", "not an integer");
            cfg.scenario.seed = s["seed"].get<std::uint64_t>();
        }
        if (cfg.scenario.lot_capacity <= 0) fail("scenario.lot_capacity", "must be > 0");
        if (cfg.scenario.daily_cars <= 0) fail("scenario.daily_cars", "must be > 0");
        if (cfg.scenario.current_time < 0.0 || cfg.scenario.current_time >= 24.0)
            fail("scenario.current_time", "must lie in [0, 24)");
        if (cfg.scenario.replications < 1) fail("scenario.replications", "must be >= 1");
    }

    if (doc.contains("fig2")) {
        const json& f = doc["fig2"];
        check_keys(f, "fig2", {"thresholds_db", "k_list", "trials", "analytic_cdf", "relays"});
        if (f.contains("thresholds_db")) {
            if (!f["thresholds_db"].is_array() || f["thresholds_db"].empty())
                fail("fig2.thresholds_db", "need a nonempty array");
            cfg.fig2.thresholds_db.clear();
            for (const auto& v : f["thresholds_db"]) {
                if (!v.is_number()) fail("fig2.thresholds_db", "not a number");
                cfg.fig2.thresholds_db.push_back(v.get<double>());
            }
            if (!std::is_sorted(cfg.fig2.thresholds_db.begin(), cfg.fig2.thresholds_db.end()))
                fail("fig2.thresholds_db", "must be sorted ascending");
        }
        if (f.contains("k_list")) {
            if (!f["k_list"].is_array() || f["k_list"].empty())
                fail("fig2.k_list", "need a nonempty array");
            cfg.fig2.k_list.clear();
            for (const auto& v : f["k_list"]) {
                if (!v.is_number_integer()) fail("fig2.k_list", "not an integer");
                cfg.fig2.k_list.push_back(v.get<int>());
            }
        }
        cfg.fig2.trials = get_integer(f, "fig2", "trials", cfg.fig2.trials);
        if (cfg.fig2.trials < 1) fail("fig2.trials", "must be >= 1");
        cfg.fig2.analytic_cdf = get_string(f, "fig2", "analytic_cdf", cfg.fig2.analytic_cdf);
        if (cfg.fig2.analytic_cdf != "exact" && cfg.fig2.analytic_cdf != "approx")
            fail("fig2.analytic_cdf", "must be \"exact\" or \"approx\"");
        if (f.contains("relays")) {
            if (!f["relays"].is_array() || f["relays"].empty())
                fail("fig2.relays", "need a nonempty array");
            cfg.fig2.relays.clear();
            int i = 0;
            for (const auto& r : f["relays"]) {
                std::string ctx = "fig2.relays[" + std::to_string(i++) + "]";
                check_keys(r, ctx, {"arrival_hour", "elapsed_parked"});
                int hour = static_cast<int>(get_integer(r, ctx, "arrival_hour", -1));
                if (hour < 0 || hour > 23) fail(ctx + ".arrival_hour", "must lie in 0..23");
                double elapsed = get_number(r, ctx, "elapsed_parked", -1.0);
                if (elapsed < 0.0) fail(ctx + ".elapsed_parked", "must be >= 0");
                cfg.fig2.relays.push_back({hour, elapsed, 0.0});
            }
        }
        for (int k : cfg.fig2.k_list)
            if (k < 1 || static_cast<std::size_t>(k) > cfg.fig2.relays.size())
                fail("fig2.k_list", "K values must lie in 1..len(relays)");
    }

    if (doc.contains("fig4")) {
        const json& f = doc["fig4"];
        check_keys(f, "fig4", {"k", "estimator"});
        cfg.fig4.k = static_cast<int>(get_integer(f, "fig4", "k", cfg.fig4.k));
        if (cfg.fig4.k < 1) fail("fig4.k", "must be >= 1");
        cfg.fig4.estimator = get_string(f, "fig4", "estimator", cfg.fig4.estimator);
        if (cfg.fig4.estimator != "analytic_sampled" && cfg.fig4.estimator != "empirical")
            fail("fig4.estimator", "must be \"analytic_sampled\" or \"empirical\"");
    }

    if (doc.contains("fig5")) {
        const json& f = doc["fig5"];
        check_keys(f, "fig5", {"t_arr_hour", "minutes_max", "minutes_step"});
        cfg.fig5.t_arr_hour = static_cast<int>(get_integer(f, "fig5", "t_arr_hour", cfg.fig5.t_arr_hour));
        if (cfg.fig5.t_arr_hour < 0 || cfg.fig5.t_arr_hour > 23)
            fail("fig5.t_arr_hour", "must lie in 0..23");
        cfg.fig5.minutes_max = get_number(f, "fig5", "minutes_max", cfg.fig5.minutes_max);
        cfg.fig5.minutes_step = get_number(f, "fig5", "minutes_step", cfg.fig5.minutes_step);
        if (!(cfg.fig5.minutes_step > 0.0)) fail("fig5.minutes_step", "must be > 0");
        if (cfg.fig5.minutes_max < 0.0) fail("fig5.minutes_max", "must be >= 0");
    }

    if (doc.contains("fig6")) {
        const json& f = doc["fig6"];
        check_keys(f, "fig6", {"t_dur_hours"});
        cfg.fig6.t_dur_hours = get_number(f, "fig6", "t_dur_hours", cfg.fig6.t_dur_hours);
        if (cfg.fig6.t_dur_hours < 0.0) fail("fig6.t_dur_hours", "must be >= 0");
    }

    return cfg;
}

std::string config_to_json(const RunConfig& cfg, bool pretty) {
    json relays = json::array();
    for (const Relay& r : cfg.fig2.relays)
        relays.push_back({{"arrival_hour", r.arrival_hour}, {"elapsed_parked", r.elapsed_parked}});
    json doc = {
        {"radio",
         {{"p_s", cfg.radio.p_s},
          {"p_ri", cfg.radio.p_ri},
          {"n0", cfg.radio.n0},
          {"gamma_th_db", 10.0 * std::log10(cfg.radio.gamma_th)},
          {"bandwidth_hz", cfg.radio.bandwidth},
          {"tau_hours", cfg.radio.tau}}},
        {"parking_table_path", cfg.parking_table_path},
        {"scenario",
         {{"lot_capacity", cfg.scenario.lot_capacity},
          {"daily_cars", cfg.scenario.daily_cars},
          {"current_time", cfg.scenario.current_time},
          {"replications", cfg.scenario.replications},
          {"seed", cfg.scenario.seed}}},
        {"threads", cfg.threads},
        {"out_dir", cfg.out_dir},
        {"fig2",
         {{"thresholds_db", cfg.fig2.thresholds_db},
          {"k_list", cfg.fig2.k_list},
          {"trials", cfg.fig2.trials},
          {"analytic_cdf", cfg.fig2.analytic_cdf},
          {"relays", relays}}},
        {"fig4", {{"k", cfg.fig4.k}, {"estimator", cfg.fig4.estimator}}},
        {"fig5",
         {{"t_arr_hour", cfg.fig5.t_arr_hour},
          {"minutes_max", cfg.fig5.minutes_max},
          {"minutes_step", cfg.fig5.minutes_step}}},
        {"fig6", {{"t_dur_hours", cfg.fig6.t_dur_hours}}},
    };
    return pretty ? doc.dump(2) : doc.dump();
}

std::string config_hash(const RunConfig& cfg) {
    // Execution knobs (worker count, output directory) are normalized out:
    // the hash identifies the experiment, and output bytes must not depend
    // on how the work was scheduled or where the files landed.
    RunConfig canon_cfg = cfg;
    canon_cfg.threads = 1;
    canon_cfg.out_dir = ".";
    std::string canon = config_to_json(canon_cfg, false);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ParkingModel resolve_parking_model(const RunConfig& cfg) {
    if (cfg.parking_table_path.empty()) return builtin_synthetic_table();
    return load_parking_table(cfg.parking_table_path);
}

std::vector<std::pair<std::string, std::string>> base_metadata(const RunConfig& cfg) {
    return {
        {"seed", fmt_int(static_cast<long long>(cfg.scenario.seed))},
        {"config_hash", config_hash(cfg)},
        {"table", cfg.parking_table_path.empty() ? "builtin-synthetic" : cfg.parking_table_path},
        {"p_s_w", fmt_double(cfg.radio.p_s)},
        {"p_ri_w", fmt_double(cfg.radio.p_ri)},
        {"n0_w", fmt_double(cfg.radio.n0)},
        {"gamma_th_db", fmt_double(10.0 * std::log10(cfg.radio.gamma_th))},
        {"tau_hours", fmt_double(cfg.radio.tau)},
    };
}

int resolve_threads(const RunConfig& cfg) {
    if (cfg.threads > 0) return cfg.threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace parkrelay
