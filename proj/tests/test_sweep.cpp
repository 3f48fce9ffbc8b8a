#include <cmath>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "qbt/errors.hpp"
#include "qbt/serialize.hpp"
#include "qbt/sweep.hpp"

using namespace qbt;
using namespace qbt::sweep;
using nlohmann::json;

namespace {

json drude_config() {
    return json::parse(R"({
        "model": {"parametrization": "w0-Omega-gamma", "w0": 1.0, "Omega": 1.0, "gamma": 1.5},
        "T_grid": {"min": 0.1, "max": 10.0, "points": 10, "scale": "log"},
        "outputs": ["T", "E_s", "F_cal", "K"]
    })");
}

}  // namespace

TEST_CASE("config parsing and validation") {
    SUBCASE("valid Drude config") {
        const auto c = SweepConfig::from_json(drude_config());
        CHECK(c.grid.points == 10);
        CHECK(c.outputs.size() == 4);
    }
    SUBCASE("field-level error messages") {
        auto j = drude_config();
        j["outputs"].push_back("no_such_field");
        CHECK_THROWS_WITH_AS(SweepConfig::from_json(j),
                             "unknown output field \"no_such_field\"", ConfigError);
        auto k = drude_config();
        k["T_grid"]["points"] = 0;
        CHECK_THROWS_AS(SweepConfig::from_json(k), ConfigError);
        auto m = drude_config();
        m["T_grid"]["min"] = 0.0;  // invalid on a log scale
        CHECK_THROWS_AS(SweepConfig::from_json(m), ConfigError);
        auto raw = json::parse(R"({"model": {"model": "drude", "gamma_o": 1.0, "omega_d": 3.0}})");
        CHECK_THROWS_AS(SweepConfig::from_json(raw), ConfigError);  // omega_0 missing
    }
    SUBCASE("divergent fields are rejected for the Ohmic model") {
        auto j = json::parse(R"({
            "model": {"model": "ohmic", "gamma_o": 0.8},
            "omega_0": 1.0,
            "outputs": ["T", "K"]
        })");
        CHECK_THROWS_AS(SweepConfig::from_json(j), ConfigError);
        j["outputs"] = {"T", "dF_cal", "v_var"};
        CHECK_NOTHROW(SweepConfig::from_json(j));
    }
}

TEST_CASE("model JSON round trip") {
    const auto m = damping::DampingModel::drude(0.8, 2.0);
    const auto parsed = model_from_json(to_json(m));
    REQUIRE(std::holds_alternative<damping::DampingModel>(parsed));
    CHECK(std::get<damping::DampingModel>(parsed).gamma_o == 0.8);
    const auto p = damping::drude_params(1.0, 5.0, 4.0);
    const auto parsed2 = model_from_json(to_json(p));
    REQUIRE(std::holds_alternative<damping::DrudeParams>(parsed2));
    CHECK(std::get<damping::DrudeParams>(parsed2).omega_d == doctest::Approx(9.0));

    const auto b = bath::random_bath(4, 9);
    const auto b2 = bath_from_json(to_json(b));
    CHECK(b2.oscillators.size() == 4);
    CHECK(b2.oscillators[2].c == doctest::Approx(b.oscillators[2].c).epsilon(1e-15));
}

TEST_CASE("sweep execution") {
    const auto c = SweepConfig::from_json(drude_config());
    const auto pts = run(c);
    SUBCASE("one record per grid point, temperatures ascending") {
        REQUIRE(pts.size() == 10);
        for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i].T > pts[i - 1].T);
        for (const auto& pt : pts) {
            REQUIRE(pt.K.has_value());
            CHECK(std::isfinite(*pt.K));
        }
    }
    SUBCASE("deterministic and independent of the thread count") {
        const auto again = run(c, 1);
        const auto threaded = run(c, 3);
        CHECK(to_csv(pts, c.outputs) == to_csv(again, c.outputs));
        CHECK(to_csv(pts, c.outputs) == to_csv(threaded, c.outputs));
    }
    SUBCASE("CSV shape and round-trip formatting") {
        const auto csv = to_csv(pts, c.outputs);
        CHECK(csv.substr(0, csv.find('\n')) == "T,E_s,F_cal,K");
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
        CHECK(csv.find("nan") == std::string::npos);
        CHECK(csv.find("inf") == std::string::npos);
        // first data value round-trips to the stored double
        const auto line = csv.substr(csv.find('\n') + 1);
        CHECK(std::stod(line.substr(0, line.find(','))) == pts[0].T);
    }
}

TEST_CASE("classical sweep has an identically zero K column") {
    auto j = drude_config();
    j["classical"] = true;
    const auto pts = run(SweepConfig::from_json(j));
    for (const auto& pt : pts) CHECK(*pt.K == 0.0);
}

TEST_CASE("Ohmic sweep carries divergent-flag objects") {
    const auto j = json::parse(R"({
        "model": {"model": "ohmic", "gamma_o": 0.8},
        "omega_0": 1.0,
        "T_grid": {"min": 0.5, "max": 2.0, "points": 3, "scale": "linear"},
        "outputs": ["T", "q_var", "v_var", "dF_cal"],
        "ohmic_cutoff_terms": 2000
    })");
    const auto c = SweepConfig::from_json(j);
    const auto pts = run(c);
    const auto records = to_json_records(pts, c.outputs);
    REQUIRE(records.size() == 3);
    CHECK(records[0]["v_var"]["divergent"] == true);
    CHECK(records[0]["v_var"]["cutoff_terms"] == 2000);
    CHECK(records[0]["v_var"].contains("value_at_cutoff"));
    const auto csv = to_csv(pts, c.outputs);
    CHECK(csv.find("v_var_at_cutoff,v_var_cutoff_terms,v_var_log_slope") != std::string::npos);
    CHECK(csv.find("nan") == std::string::npos);
}

TEST_CASE("figure-1 CSV") {
    const auto csv = figure1_csv(20, 0.01, 50.0);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "T,K_over_hw0_set1,K_over_hw0_set2,K_over_hw0_set3,K_over_hw0_set4");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 21);
    CHECK(csv.find("nan") == std::string::npos);
}

TEST_CASE("discrete report") {
    const auto b = bath::random_bath(4, 11);
    const auto rep = discrete_report(b, {0.0, 0.5, 2.0}, PhysicalConstants{});
    CHECK(rep["interlacing"] == true);
    REQUIRE(rep["temperatures"].size() == 3);
    for (const auto& r : rep["temperatures"]) {
        CHECK(std::abs(r["E_s_oracle_delta"].get<double>()) < 1e-9);
        CHECK(r["K"].get<double>() >= -1e-9);
        CHECK(r["E_cal"].get<double>() >= r["F_cal"].get<double>() - 1e-12);
        CHECK(r["oracle_fallback"] == false);
    }
}

TEST_CASE("discrete report flags the oracle fallback on a near-degenerate bath") {
    bath::DiscreteBath b;
    b.omega_0 = 1.0;
    b.oscillators = {{1.0, 1.0 - 1e-13, 1e-9}, {1.0, 1.0 + 1e-13, 1e-9}};
    const auto rep = discrete_report(b, {1.0}, PhysicalConstants{});
    CHECK(rep["temperatures"][0]["oracle_fallback"] == true);
    CHECK(std::isfinite(rep["temperatures"][0]["E_s"].get<double>()));
}
