#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "parkrelay/config.hpp"
#include "parkrelay/csvio.hpp"

using namespace parkrelay;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path, std::ios::binary);
    out << body;
    return path;
}

// Parse the default config, apply an edit to the document, write it out.
template <typename Edit>
std::string patched_config(const std::string& name, Edit&& edit) {
    nlohmann::json doc = nlohmann::json::parse(config_to_json(default_config()));
    edit(doc);
    return write_temp(name, doc.dump(2));
}

}  // namespace

TEST_SUITE("config_csv") {

TEST_CASE("default config round-trips through its own serialization") {
    RunConfig def = default_config();
    std::string path = write_temp("parkrelay_cfg_rt.json", config_to_json(def, true));
    RunConfig back = load_config(path);
    CHECK(config_to_json(back) == config_to_json(def));
    CHECK(config_hash(back) == config_hash(def));
    CHECK(back.radio.gamma_th == doctest::Approx(def.radio.gamma_th));
    CHECK(back.fig2.thresholds_db == def.fig2.thresholds_db);
    CHECK(back.fig2.k_list == def.fig2.k_list);
    CHECK(back.scenario.seed == def.scenario.seed);
    std::remove(path.c_str());
}

TEST_CASE("partial config files inherit defaults for omitted sections") {
    std::string path = write_temp("parkrelay_cfg_partial.json",
                                  "{\"radio\": {\"gamma_th_db\": 5.0}}");
    RunConfig cfg = load_config(path);
    CHECK(cfg.radio.gamma_th == doctest::Approx(std::pow(10.0, 0.5)).epsilon(1e-12));
    CHECK(cfg.radio.p_s == default_config().radio.p_s);
    CHECK(cfg.scenario.seed == default_config().scenario.seed);
    CHECK(cfg.fig2.k_list == default_config().fig2.k_list);
    std::remove(path.c_str());
}

TEST_CASE("config hash: stable, seed-sensitive, execution-knob-insensitive") {
    RunConfig def = default_config();
    std::string h = config_hash(def);
    CHECK(h.size() == 16);
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
    CHECK(config_hash(def) == h);

    RunConfig seeded = def;
    seeded.scenario.seed = 43;
    CHECK(config_hash(seeded) != h);
    RunConfig powered = def;
    powered.radio.p_s = 3.0;
    CHECK(config_hash(powered) != h);

    // Worker count and output directory change scheduling and placement,
    // never results, so they must not perturb the hash stamped in metadata.
    RunConfig threaded = def;
    threaded.threads = 8;
    threaded.out_dir = "/somewhere/else";
    CHECK(config_hash(threaded) == h);
}

TEST_CASE("loader: strictness and field-naming errors") {
    std::string p1 = patched_config("parkrelay_cfg_unknown.json", [](nlohmann::json& d) {
        d["thread_count"] = d["threads"];
        d.erase("threads");
    });
    CHECK_THROWS_WITH_AS(load_config(p1), doctest::Contains("thread_count"), ConfigError);

    std::string p2 = patched_config("parkrelay_cfg_badnoise.json", [](nlohmann::json& d) {
        d["radio"]["n0"] = -0.2;
    });
    CHECK_THROWS_WITH_AS(load_config(p2), doctest::Contains("n0"), ConfigError);

    std::string p3 = patched_config("parkrelay_cfg_badest.json", [](nlohmann::json& d) {
        d["fig4"]["estimator"] = "analytic_smapled";
    });
    CHECK_THROWS_WITH_AS(load_config(p3), doctest::Contains("estimator"), ConfigError);

    std::string p4 = patched_config("parkrelay_cfg_badk.json", [](nlohmann::json& d) {
        d["fig2"]["k_list"] = {1, 2, 9};
    });
    CHECK_THROWS_WITH_AS(load_config(p4), doctest::Contains("k_list"), ConfigError);

    std::string p5 = patched_config("parkrelay_cfg_badtime.json", [](nlohmann::json& d) {
        d["scenario"]["current_time"] = 24.0;
    });
    CHECK_THROWS_WITH_AS(load_config(p5), doctest::Contains("current_time"), ConfigError);

    std::string notjson = write_temp("parkrelay_cfg_notjson.json", "{{{{");
    CHECK_THROWS_AS(load_config(notjson), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), ConfigError);

    for (auto* p : {&p1, &p2, &p3, &p4, &p5, &notjson}) std::remove(p->c_str());
}

TEST_CASE("loader: threshold values convert from dB and must be sorted") {
    std::string p = patched_config("parkrelay_cfg_db.json", [](nlohmann::json& d) {
        d["radio"]["gamma_th_db"] = 10.0;
    });
    RunConfig cfg = load_config(p);
    CHECK(cfg.radio.gamma_th == doctest::Approx(10.0).epsilon(1e-12));
    std::remove(p.c_str());

    std::string p2 = patched_config("parkrelay_cfg_unsorted.json", [](nlohmann::json& d) {
        d["fig2"]["thresholds_db"] = {4.0, 2.0, 6.0};
    });
    CHECK_THROWS_WITH_AS(load_config(p2), doctest::Contains("thresholds_db"),
                         ConfigError);
    std::remove(p2.c_str());
}

TEST_CASE("base metadata carries the reproducibility fields") {
    RunConfig def = default_config();
    auto meta = base_metadata(def);
    auto find = [&](const std::string& key) -> std::string {
        for (const auto& kv : meta)
            if (kv.first == key) return kv.second;
        return "<missing>";
    };
    CHECK(find("seed") == "42");
    CHECK(find("config_hash") == config_hash(def));
    CHECK(find("table") == "builtin-synthetic");
    CHECK(find("gamma_th_db") == "0");
    CHECK(find("tau_hours") == "0.5");
    CHECK(find("n0_w") == "0.2");
}

TEST_CASE("number formatting is locale-free %.12g") {
    CHECK(fmt_double(0.5) == "0.5");
    CHECK(fmt_double(1.0 / 3.0) == "0.333333333333");
    CHECK(fmt_double(1e-7) == "1e-07");
    CHECK(fmt_double(12345678.0) == "12345678");
    CHECK(fmt_double(0.0) == "0");
    CHECK(fmt_int(-42) == "-42");
    CHECK(fmt_int(9007199254740993ll) == "9007199254740993");
}

TEST_CASE("csv rendering: exact bytes, metadata block, width check") {
    CsvTable t;
    t.metadata = {{"seed", "42"}, {"trials", "1000"}};
    t.columns = {"x", "y"};
    t.rows = {{"1", "0.5"}, {"2", "0.25"}};
    CHECK(render_csv(t) ==
          "# seed=42\n# trials=1000\nx,y\n1,0.5\n2,0.25\n");

    CsvTable bare;
    bare.columns = {"only"};
    bare.rows = {{"1"}};
    CHECK(render_csv(bare) == "only\n1\n");

    CsvTable broken;
    broken.columns = {"a", "b"};
    broken.rows = {{"1"}};
    CHECK_THROWS_AS(render_csv(broken), std::logic_error);
}

TEST_CASE("file writer round-trips bytes exactly") {
    std::string path = "/tmp/parkrelay_csv_rt.csv";
    std::string body = "# k=v\nh\n1\n";
    write_file(path, body);
    std::ifstream in(path, std::ios::binary);
    std::string back((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    CHECK(back == body);
    std::remove(path.c_str());
    CHECK_THROWS_AS(write_file("/nonexistent_dir/x.csv", body), std::runtime_error);
}

TEST_CASE("parking model resolution honors the path field") {
    RunConfig def = default_config();
    ParkingModel builtin = resolve_parking_model(def);
    CHECK(builtin.duration_table[8].d2 == builtin_synthetic_table().duration_table[8].d2);
    RunConfig missing = def;
    missing.parking_table_path = "/nonexistent/table.json";
    CHECK_THROWS_AS(resolve_parking_model(missing), TableError);
}

}  // TEST_SUITE
