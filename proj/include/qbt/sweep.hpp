#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qbt/constants.hpp"
#include "qbt/damping.hpp"
#include "qbt/discrete_bath.hpp"
#include "qbt/thermo.hpp"

namespace qbt::sweep {

struct TemperatureGrid {
    double min = 0.01;
    double max = 50.0;
    int points = 200;
    bool log_scale = true;

    std::vector<double> values() const;
};

// Full description of a temperature sweep; parsed from the CLI --config JSON.
struct SweepConfig {
    std::variant<damping::DampingModel, damping::DrudeParams> model;
    double omega_0 = 1.0;  // system frequency when `model` is a raw DampingModel
    TemperatureGrid grid;
    std::vector<std::string> outputs;  // requested ThermoPoint fields
    PhysicalConstants constants;
    thermo::EvaluateOptions options;

    static SweepConfig from_json(const nlohmann::json& j);
    void validate() const;
};

// Evaluates the grid, optionally across threads; output order matches the
// grid regardless of scheduling.
std::vector<thermo::ThermoPoint> run(const SweepConfig& config, int jobs = 1);

// CSV with a header row, comma separators, LF line endings and 17-digit
// round-trip floats. Divergent quantities expand into value/cutoff/slope
// columns; NaN is never written.
std::string to_csv(const std::vector<thermo::ThermoPoint>& points,
                   const std::vector<std::string>& fields);

nlohmann::json to_json_records(const std::vector<thermo::ThermoPoint>& points,
                               const std::vector<std::string>& fields);

// The four caption parameter sets (Omega, gamma) = (1,3/2), (1,4), (5,3/2),
// (5,4) at hbar = k_B = w0 = M = 1; 200 log-spaced T in [0.01, 50]; columns
// T, K_set1..K_set4 in units of hbar w0.
std::string figure1_csv(int points = 200, double t_min = 0.01, double t_max = 50.0);

// Discrete-bath report: normal modes, interlacing verdict, closed-form vs
// oracle energy delta, F_cal, E_cal and K per temperature.
nlohmann::json discrete_report(const bath::DiscreteBath& b, const std::vector<double>& T_list,
                               const PhysicalConstants& consts);

}  // namespace qbt::sweep
