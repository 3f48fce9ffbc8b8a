// qbt — equilibrium thermodynamics of the damped quantum harmonic oscillator.
//
// Subcommands:
//   figure1   second-law gap K(T) for the four reference Drude parameter sets
//   sweep     temperature sweep of thermodynamic quantities from a JSON config
//   discrete  exact finite-N bath report (normal modes, energies, K)
//   verify    self-verification suite (quick | full)

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbt/errors.hpp"
#include "qbt/serialize.hpp"
#include "qbt/sweep.hpp"
#include "qbt/verify.hpp"

namespace {

int log_level() {
    const char* env = std::getenv("QBT_LOG");
    if (!env) return 0;
    const std::string v(env);
    if (v == "debug") return 2;
    if (v == "info" || v == "1") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::fprintf(stderr, "qbt: %s\n", msg.c_str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qbt::Error("cannot open output file: " + path);
    out << content;
    if (!out) throw qbt::Error("failed writing output file: " + path);
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qbt::Error("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw qbt::ConfigError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilibrium thermodynamics of the damped quantum oscillator"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    int jobs = 1;
    unsigned long long seed = 42;
    double tol = 0.0;  // 0 = keep defaults
    bool classical = false;

    auto* fig = app.add_subcommand("figure1", "K(T) curves for the four reference sets");
    fig->add_option("--out", out_path, "output CSV path")->required();

    auto* sw = app.add_subcommand("sweep", "temperature sweep from a JSON config");
    sw->add_option("--config", config_path, "sweep config JSON")->required();
    sw->add_option("--out", out_path, "output path (.csv or .json)")->required();
    sw->add_option("--jobs", jobs, "parallel evaluation threads");
    sw->add_option("--tol", tol, "override quadrature/series relative tolerance");
    sw->add_flag("--classical", classical, "use the hbar -> 0 formulas");

    auto* disc = app.add_subcommand("discrete", "finite-N discrete-bath report");
    std::string bath_path, t_list = "0,0.1,1,10";
    int random_n = 0;
    disc->add_option("--bath", bath_path, "bath JSON file");
    disc->add_option("--random-n", random_n, "generate a seeded random bath of this size instead");
    disc->add_option("--T", t_list, "comma-separated temperature list");
    disc->add_option("--seed", seed, "seed for --random-n");
    disc->add_option("--out", out_path, "output JSON path")->required();

    auto* ver = app.add_subcommand("verify", "run the self-verification suite");
    std::string level = "quick";
    ver->add_option("level", level, "quick | full")->check(CLI::IsMember({"quick", "full"}));
    ver->add_option("--seed", seed, "seed for randomized checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fig->parsed()) {
            log_info("computing figure-1 grid");
            write_file(out_path, qbt::sweep::figure1_csv());
            return 0;
        }
        if (sw->parsed()) {
            auto config = qbt::sweep::SweepConfig::from_json(load_json(config_path));
            if (tol > 0.0) {
                config.options.quad_tol = tol;
                config.options.series.rel_tol = tol;
            }
            if (classical) config.options.classical = true;
            log_info("sweeping " + std::to_string(config.grid.points) + " temperatures");
            const auto points = qbt::sweep::run(config, jobs);
            if (ends_with(out_path, ".json"))
                write_file(out_path,
                           qbt::sweep::to_json_records(points, config.outputs).dump(2) + "\n");
            else
                write_file(out_path, qbt::sweep::to_csv(points, config.outputs));
            return 0;
        }
        if (disc->parsed()) {
            qbt::bath::DiscreteBath b;
            if (random_n > 0)
                b = qbt::bath::random_bath(random_n, seed);
            else if (!bath_path.empty())
                b = qbt::bath_from_json(load_json(bath_path));
            else
                throw qbt::ConfigError("discrete: provide --bath or --random-n");
            std::vector<double> temps;
            std::stringstream ss(t_list);
            std::string item;
            while (std::getline(ss, item, ',')) temps.push_back(std::stod(item));
            const auto report = qbt::sweep::discrete_report(b, temps, qbt::PhysicalConstants{});
            write_file(out_path, report.dump(2) + "\n");
            return 0;
        }
        if (ver->parsed()) {
            const auto results = level == "quick" ? qbt::verify::run_quick(seed)
                                                  : qbt::verify::run_full(seed);
            const bool ok = qbt::verify::report(results);
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "qbt: error: %s\n", e.what());
        return 2;
    }
    return 0;
}
