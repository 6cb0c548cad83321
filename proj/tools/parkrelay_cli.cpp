// parkrelay: reproduce the parked-relay link analysis figures as CSV.
//
// Subcommands map one-to-one onto the experiment set: fig2 (outage vs SNR
// threshold, analytical and simulated), fig3 (a day of lot activity), fig4
// (daily outage profile), fig5/fig6 (parked-duration and arrival-hour
// sensitivity), fig7 (daily capacity profile), validate (oracle suite),
// print-default-config. Every run is a pure function of (config, seed).

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parkrelay/capacity.hpp"
#include "parkrelay/config.hpp"
#include "parkrelay/csvio.hpp"
#include "parkrelay/montecarlo.hpp"
#include "parkrelay/outage.hpp"
#include "parkrelay/rng.hpp"
#include "parkrelay/validate.hpp"

namespace {

using namespace parkrelay;

std::string write_table(const RunConfig& cfg, const std::string& filename, const CsvTable& t) {
    std::filesystem::create_directories(cfg.out_dir);
    std::string path = (std::filesystem::path(cfg.out_dir) / filename).string();
    write_file(path, render_csv(t));
    return path;
}

CsvTable make_table(const RunConfig& cfg, const char* command) {
    CsvTable t;
    t.metadata = base_metadata(cfg);
    t.metadata.insert(t.metadata.begin(), {"command", command});
    return t;
}

int cmd_fig2(RunConfig cfg, long long trials_override) {
    long long trials = trials_override > 0 ? trials_override : cfg.fig2.trials;
    ParkingModel model = resolve_parking_model(cfg);
    CdfVariant variant =
        cfg.fig2.analytic_cdf == "approx" ? CdfVariant::approx : CdfVariant::exact;
    std::vector<SweepRow> rows = outage_vs_threshold_sweep(
        cfg.radio, cfg.fig2.relays, model, cfg.fig2.thresholds_db, cfg.fig2.k_list, variant);

    int threads = resolve_threads(cfg);
    for (std::size_t idx = 0; idx < rows.size(); ++idx) {
        SweepRow& row = rows[idx];
        RadioConfig rc = cfg.radio;
        rc.gamma_th = std::pow(10.0, row.threshold_db / 10.0);
        std::vector<Relay> subset(cfg.fig2.relays.begin(), cfg.fig2.relays.begin() + row.k);
        std::uint64_t point_seed = cfg.scenario.seed ^ (0x9E3779B97F4A7C15ull * (idx + 1));
        TrialEstimate est = estimate_outage(subset, model, rc, trials, point_seed, threads);
        row.p_out_simulated = est.point;
        row.ci_halfwidth = est.half_width;
    }

    CsvTable t = make_table(cfg, "fig2");
    t.metadata.push_back({"trials", fmt_int(trials)});
    t.metadata.push_back({"analytic_cdf", cfg.fig2.analytic_cdf});
    t.columns = {"threshold_db", "k", "p_out_analytical", "p_out_simulated", "ci_halfwidth"};
    for (const SweepRow& r : rows)
        t.rows.push_back({fmt_double(r.threshold_db), fmt_int(r.k),
                          fmt_double(r.p_out_analytical), fmt_double(r.p_out_simulated),
                          fmt_double(r.ci_halfwidth)});
    std::cout << "wrote " << write_table(cfg, "fig2_outage_vs_threshold.csv", t) << "\n";
    return 0;
}

int cmd_fig3(RunConfig cfg, long long trials_override) {
    if (trials_override > 0) cfg.scenario.replications = static_cast<int>(trials_override);
    ParkingModel model = resolve_parking_model(cfg);
    const DayScenario& sc = cfg.scenario;

    std::array<double, 24> arrivals{}, departures{}, occupancy{};
    double admitted = 0.0, rejected = 0.0;
    for (int rep = 0; rep < sc.replications; ++rep) {
        auto g = substream(sc.seed, 7000 + rep);
        LotState lot = generate_day(model, sc, g);
        for (int h = 0; h < 24; ++h) {
            arrivals[h] += lot.arrivals[h];
            departures[h] += lot.departures[h];
            occupancy[h] += lot.occupancy[h];
        }
        admitted += lot.admitted;
        rejected += lot.rejected;
    }
    double inv = 1.0 / sc.replications;

    CsvTable t = make_table(cfg, "fig3");
    t.metadata.push_back({"replications", fmt_int(sc.replications)});
    t.metadata.push_back({"admitted_mean", fmt_double(admitted * inv)});
    t.metadata.push_back({"rejected_mean", fmt_double(rejected * inv)});
    t.metadata.push_back({"departure_attribution", "(arrival_hour + duration) mod 24"});
    t.columns = {"hour", "arrivals", "departures", "occupancy"};
    for (int h = 0; h < 24; ++h)
        t.rows.push_back({fmt_int(h), fmt_double(arrivals[h] * inv),
                          fmt_double(departures[h] * inv), fmt_double(occupancy[h] * inv)});
    std::cout << "wrote " << write_table(cfg, "fig3_day_timeline.csv", t) << "\n";
    return 0;
}

int cmd_fig4(RunConfig cfg, long long trials_override) {
    if (trials_override > 0) cfg.scenario.replications = static_cast<int>(trials_override);
    ParkingModel model = resolve_parking_model(cfg);
    ProfileEstimator est = cfg.fig4.estimator == "empirical" ? ProfileEstimator::empirical
                                                             : ProfileEstimator::analytic_sampled;
    std::vector<HourlyPoint> pts =
        outage_day_profile(model, cfg.radio, cfg.scenario, cfg.fig4.k, est, CdfVariant::exact);

    CsvTable t = make_table(cfg, "fig4");
    t.metadata.push_back({"replications", fmt_int(cfg.scenario.replications)});
    t.metadata.push_back({"k", fmt_int(cfg.fig4.k)});
    t.metadata.push_back({"estimator", cfg.fig4.estimator});
    std::string skipped;
    t.columns = {"hour", "outage_mean", "outage_ci_halfwidth", "samples"};
    for (const HourlyPoint& p : pts) {
        if (p.skipped) {
            skipped += (skipped.empty() ? "" : ",") + fmt_int(p.hour);
            continue;
        }
        t.rows.push_back({fmt_int(p.hour), fmt_double(p.mean), fmt_double(p.ci_halfwidth),
                          fmt_int(p.samples)});
    }
    t.metadata.push_back({"skipped_hours", skipped.empty() ? "none" : skipped});
    std::cout << "wrote " << write_table(cfg, "fig4_outage_profile.csv", t) << "\n";
    return 0;
}

int cmd_fig5(RunConfig cfg) {
    ParkingModel model = resolve_parking_model(cfg);
    std::vector<double> minutes;
    for (double m = 0.0; m <= cfg.fig5.minutes_max + 1e-9; m += cfg.fig5.minutes_step)
        minutes.push_back(m);
    std::vector<GridPoint> grid =
        tdur_sensitivity(model, cfg.radio, cfg.fig5.t_arr_hour, minutes, CdfVariant::exact);

    CsvTable t = make_table(cfg, "fig5");
    t.metadata.push_back({"t_arr_hour", fmt_int(cfg.fig5.t_arr_hour)});
    t.metadata.push_back({"relative_spread", fmt_double(relative_spread(grid))});
    t.columns = {"tdur_minutes", "p_out"};
    for (const GridPoint& p : grid) t.rows.push_back({fmt_double(p.x), fmt_double(p.p_out)});
    std::cout << "wrote " << write_table(cfg, "fig5_tdur_sensitivity.csv", t) << "\n";
    return 0;
}

int cmd_fig6(RunConfig cfg) {
    ParkingModel model = resolve_parking_model(cfg);
    std::vector<GridPoint> grid =
        tarr_sensitivity(model, cfg.radio, cfg.fig6.t_dur_hours, CdfVariant::exact);

    double band_16_18 = 0.0, band_6_10 = 0.0;
    int n_aft = 0, n_mor = 0;
    for (const GridPoint& p : grid) {
        if (p.x >= 16 && p.x <= 18) { band_16_18 += p.p_out; ++n_aft; }
        if (p.x >= 6 && p.x <= 10) { band_6_10 += p.p_out; ++n_mor; }
    }
    band_16_18 /= std::max(n_aft, 1);
    band_6_10 /= std::max(n_mor, 1);

    CsvTable t = make_table(cfg, "fig6");
    t.metadata.push_back({"t_dur_hours", fmt_double(cfg.fig6.t_dur_hours)});
    t.metadata.push_back({"relative_spread", fmt_double(relative_spread(grid))});
    t.metadata.push_back({"band_16_18_mean", fmt_double(band_16_18)});
    t.metadata.push_back({"band_6_10_mean", fmt_double(band_6_10)});
    t.metadata.push_back({"afternoon_exceeds_morning", band_16_18 > band_6_10 ? "true" : "false"});
    t.columns = {"tarr_hour", "p_out"};
    for (const GridPoint& p : grid) t.rows.push_back({fmt_double(p.x), fmt_double(p.p_out)});
    std::cout << "wrote " << write_table(cfg, "fig6_tarr_sensitivity.csv", t) << "\n";
    return 0;
}

int cmd_fig7(RunConfig cfg, long long trials_override) {
    if (trials_override > 0) cfg.scenario.replications = static_cast<int>(trials_override);
    ParkingModel model = resolve_parking_model(cfg);
    std::vector<HourlyPoint> pts = capacity_day_profile(model, cfg.radio, cfg.scenario);

    CsvTable t = make_table(cfg, "fig7");
    t.metadata.push_back({"replications", fmt_int(cfg.scenario.replications)});
    t.columns = {"hour", "capacity_mean", "capacity_ci_halfwidth"};
    for (const HourlyPoint& p : pts)
        t.rows.push_back({fmt_int(p.hour), fmt_double(p.mean), fmt_double(p.ci_halfwidth)});
    std::cout << "wrote " << write_table(cfg, "fig7_capacity_profile.csv", t) << "\n";
    return 0;
}

int cmd_validate(RunConfig cfg, long long trials_override) {
    if (trials_override > 0) cfg.fig2.trials = trials_override;
    std::vector<CheckResult> results = run_validation_suite(cfg);
    int failures = print_report(results, std::cout);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parked-relay cooperative link analysis"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_override;
    std::uint64_t seed_override = 0;
    long long trials_override = -1;
    app.add_option("--config", config_path, "JSON run configuration file");
    CLI::Option* seed_opt = app.add_option("--seed", seed_override, "scenario seed override");
    app.add_option("--out", out_override, "output directory override");
    app.add_option("--trials", trials_override, "trial/replication count override");

    const char* names[] = {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7",
                           "validate", "print-default-config"};
    const char* descs[] = {"outage vs SNR threshold, analytical + simulated",
                           "one day of parking-lot arrivals/departures/occupancy",
                           "daily outage profile, hours 7..22",
                           "outage vs parked duration at fixed arrival hour",
                           "outage vs arrival hour at fixed parked duration",
                           "daily capacity profile, hours 7..22",
                           "run the oracle self-check suite",
                           "print the default configuration as JSON"};
    for (int i = 0; i < 8; ++i) app.add_subcommand(names[i], descs[i])->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
        if (!seed_opt->empty()) cfg.scenario.seed = seed_override;
        if (!out_override.empty()) cfg.out_dir = out_override;

        if (app.got_subcommand("print-default-config")) {
            std::cout << config_to_json(default_config(), true) << "\n";
            return 0;
        }
        if (app.got_subcommand("fig2")) return cmd_fig2(std::move(cfg), trials_override);
        if (app.got_subcommand("fig3")) return cmd_fig3(std::move(cfg), trials_override);
        if (app.got_subcommand("fig4")) return cmd_fig4(std::move(cfg), trials_override);
        if (app.got_subcommand("fig5")) return cmd_fig5(std::move(cfg));
        if (app.got_subcommand("fig6")) return cmd_fig6(std::move(cfg));
        if (app.got_subcommand("fig7")) return cmd_fig7(std::move(cfg), trials_override);
        if (app.got_subcommand("validate")) return cmd_validate(std::move(cfg), trials_override);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
