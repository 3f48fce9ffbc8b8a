#include "qbt/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <set>
#include <thread>

#include "qbt/serialize.hpp"

namespace qbt::sweep {

std::vector<double> TemperatureGrid::values() const {
    std::vector<double> t(points);
    if (points == 1) {
        t[0] = min;
        return t;
    }
    if (log_scale) {
        const double l0 = std::log(min), l1 = std::log(max);
        for (int i = 0; i < points; ++i)
            t[i] = std::exp(l0 + (l1 - l0) * double(i) / double(points - 1));
    } else {
        for (int i = 0; i < points; ++i)
            t[i] = min + (max - min) * double(i) / double(points - 1);
    }
    return t;
}

namespace {

const std::set<std::string> known_fields = {
    "T",     "e_free", "f_free", "E_s",   "F_cal",          "E_cal", "F_s",
    "S_s",   "K",      "q_var",  "v_var", "E_s_regularized", "dF_cal"};

}  // namespace

void SweepConfig::validate() const {
    constants.validate();
    if (!(grid.min >= 0.0)) throw ConfigError("T_grid.min must be >= 0");
    if (!(grid.max >= grid.min)) throw ConfigError("T_grid.max must be >= T_grid.min");
    if (grid.points < 1) throw ConfigError("T_grid.points must be >= 1");
    if (grid.log_scale && !(grid.min > 0.0))
        throw ConfigError("T_grid.min must be > 0 on a log scale");
    if (!(omega_0 > 0.0)) throw ConfigError("omega_0 must be positive");
    const bool ohmic = std::holds_alternative<damping::DampingModel>(model) &&
                       std::get<damping::DampingModel>(model).kind == damping::BathKind::Ohmic;
    for (const auto& f : outputs) {
        if (!known_fields.count(f)) throw ConfigError("unknown output field \"" + f + "\"");
        if (ohmic && (f == "K" || f == "E_s" || f == "F_cal" || f == "F_s" || f == "S_s" ||
                      f == "E_cal"))
            throw ConfigError("field \"" + f +
                              "\" is not defined for the Ohmic model (divergent; request "
                              "dF_cal / q_var / v_var / E_s_regularized instead)");
        if (options.classical && (f == "E_cal" || f == "F_s" || f == "S_s" || f == "q_var" ||
                                  f == "v_var" || f == "E_s_regularized" || f == "dF_cal"))
            throw ConfigError("field \"" + f + "\" is not available in classical mode");
    }
}

SweepConfig SweepConfig::from_json(const nlohmann::json& j) {
    SweepConfig c;
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    if (!j.contains("model")) throw ConfigError("config: missing \"model\"");
    c.model = model_from_json(j["model"]);
    if (std::holds_alternative<damping::DrudeParams>(c.model))
        c.omega_0 = std::get<damping::DrudeParams>(c.model).omega_0;
    else if (j.contains("omega_0"))
        c.omega_0 = j["omega_0"].get<double>();
    else
        throw ConfigError("config: \"omega_0\" is required with a raw damping model");
    if (j.contains("T_grid")) {
        const auto& g = j["T_grid"];
        if (g.contains("min")) c.grid.min = g["min"].get<double>();
        if (g.contains("max")) c.grid.max = g["max"].get<double>();
        if (g.contains("points")) c.grid.points = g["points"].get<int>();
        if (g.contains("scale")) {
            const std::string s = g["scale"].get<std::string>();
            if (s == "log")
                c.grid.log_scale = true;
            else if (s == "linear")
                c.grid.log_scale = false;
            else
                throw ConfigError("T_grid.scale must be \"log\" or \"linear\"");
        }
    }
    if (j.contains("outputs")) {
        for (const auto& f : j["outputs"]) c.outputs.push_back(f.get<std::string>());
    } else {
        c.outputs = {"T", "e_free", "f_free", "E_s", "F_cal", "K"};
    }
    if (j.contains("constants")) {
        const auto& k = j["constants"];
        if (k.contains("hbar")) c.constants.hbar = k["hbar"].get<double>();
        if (k.contains("k_B")) c.constants.k_B = k["k_B"].get<double>();
        if (k.contains("M")) c.constants.M = k["M"].get<double>();
    }
    if (j.contains("series")) {
        const auto& s = j["series"];
        if (s.contains("rel_tol")) c.options.series.rel_tol = s["rel_tol"].get<double>();
        if (s.contains("abs_tol")) c.options.series.abs_tol = s["abs_tol"].get<double>();
        if (s.contains("max_terms")) c.options.series.max_terms = s["max_terms"].get<std::int64_t>();
    }
    if (j.contains("quad_tol")) c.options.quad_tol = j["quad_tol"].get<double>();
    if (j.contains("classical")) c.options.classical = j["classical"].get<bool>();
    if (j.contains("ohmic_cutoff_terms"))
        c.options.ohmic_cutoff_terms = j["ohmic_cutoff_terms"].get<std::int64_t>();
    for (const auto& f : c.outputs) {
        if (f == "E_cal") c.options.want_coupling_energy = true;
        if (f == "F_s" || f == "S_s") c.options.want_system_free_energy = true;
        if (f == "q_var" || f == "v_var" || f == "E_s_regularized")
            c.options.want_variances = true;
    }
    c.validate();
    return c;
}

std::vector<thermo::ThermoPoint> run(const SweepConfig& config, int jobs) {
    config.validate();
    const auto temps = config.grid.values();
    std::vector<thermo::ThermoPoint> out(temps.size());
    auto eval_one = [&](std::size_t i) {
        if (std::holds_alternative<damping::DrudeParams>(config.model))
            out[i] = thermo::evaluate_point(std::get<damping::DrudeParams>(config.model),
                                            temps[i], config.constants, config.options);
        else
            out[i] = thermo::evaluate_point(std::get<damping::DampingModel>(config.model),
                                            config.omega_0, temps[i], config.constants,
                                            config.options);
    };
    jobs = std::max(1, jobs);
    if (jobs == 1 || temps.size() < 2) {
        for (std::size_t i = 0; i < temps.size(); ++i) eval_one(i);
        return out;
    }
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < temps.size(); i = next.fetch_add(1))
                eval_one(i);
        });
    for (auto& w : workers) w.join();
    return out;
}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Scalar fields print one column; regularized fields expand to three.
void append_header(std::string& line, const std::string& field) {
    if (field == "v_var" || field == "E_s_regularized") {
        line += field + "_at_cutoff," + field + "_cutoff_terms," + field + "_log_slope";
    } else {
        line += field;
    }
}

void append_value(std::string& line, const thermo::ThermoPoint& pt, const std::string& field) {
    auto opt_num = [&](const std::optional<double>& v) {
        if (!v) throw ConfigError("field \"" + field + "\" was not computed for this sweep");
        line += format_double(*v);
    };
    if (field == "T")
        line += format_double(pt.T);
    else if (field == "e_free")
        line += format_double(pt.e_free);
    else if (field == "f_free")
        line += format_double(pt.f_free);
    else if (field == "E_s")
        opt_num(pt.E_s);
    else if (field == "F_cal")
        opt_num(pt.F_cal);
    else if (field == "E_cal")
        opt_num(pt.E_cal);
    else if (field == "F_s")
        opt_num(pt.F_s);
    else if (field == "S_s")
        opt_num(pt.S_s);
    else if (field == "K")
        opt_num(pt.K);
    else if (field == "q_var")
        opt_num(pt.q_var);
    else if (field == "dF_cal")
        opt_num(pt.dF_cal);
    else if (field == "v_var" || field == "E_s_regularized") {
        const auto& rv = field == "v_var" ? pt.v_var : pt.E_s_regularized;
        if (!rv) throw ConfigError("field \"" + field + "\" was not computed for this sweep");
        line += format_double(rv->value);
        line += ',';
        line += std::to_string(rv->cutoff_terms);
        line += ',';
        line += format_double(rv->log_slope.value_or(0.0));
    } else {
        throw ConfigError("unknown output field \"" + field + "\"");
    }
}

}  // namespace

std::string to_csv(const std::vector<thermo::ThermoPoint>& points,
                   const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        append_header(out, fields[i]);
    }
    out += '\n';
    for (const auto& pt : points) {
        std::string line;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) line += ',';
            append_value(line, pt, fields[i]);
        }
        out += line;
        out += '\n';
    }
    return out;
}

nlohmann::json to_json_records(const std::vector<thermo::ThermoPoint>& points,
                               const std::vector<std::string>& fields) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& pt : points) {
        nlohmann::json all = to_json(pt);
        nlohmann::json rec;
        for (const auto& f : fields) {
            if (!all.contains(f))
                throw ConfigError("field \"" + f + "\" was not computed for this sweep");
            rec[f] = all[f];
        }
        arr.push_back(rec);
    }
    return arr;
}

std::string figure1_csv(int points, double t_min, double t_max) {
    const PhysicalConstants consts;  // hbar = k_B = M = 1, and w0 = 1 below
    const damping::DrudeParams sets[4] = {
        damping::drude_params(1.0, 1.0, 1.5), damping::drude_params(1.0, 1.0, 4.0),
        damping::drude_params(1.0, 5.0, 1.5), damping::drude_params(1.0, 5.0, 4.0)};
    TemperatureGrid grid{t_min, t_max, points, true};
    std::string out = "T,K_over_hw0_set1,K_over_hw0_set2,K_over_hw0_set3,K_over_hw0_set4\n";
    for (double T : grid.values()) {
        std::string line = format_double(T);
        for (const auto& p : sets) {
            line += ',';
            line += format_double(thermo::drude_second_law_gap(p, T, consts));
        }
        out += line;
        out += '\n';
    }
    return out;
}

nlohmann::json discrete_report(const bath::DiscreteBath& b, const std::vector<double>& T_list,
                               const PhysicalConstants& consts) {
    const auto modes = bath::normal_modes(b);
    nlohmann::json rep;
    rep["bath"] = to_json(b);
    rep["normal_modes"] = modes.omega_bar;
    rep["interlacing"] = bath::interlacing_holds(b, modes);
    nlohmann::json per_t = nlohmann::json::array();
    for (double T : T_list) {
        nlohmann::json r;
        r["T"] = T;
        bool fallback = false;
        const double es = bath::energy(b, T, consts, &fallback);
        r["E_s"] = es;
        r["oracle_fallback"] = fallback;
        const double oracle = bath::energy_oracle(b, T, consts);
        r["E_s_oracle_delta"] = es - oracle;
        r["F_cal"] = bath::coupling_free_energy(b, T, consts);
        r["E_cal"] = bath::coupling_energy(b, T, consts);
        r["K"] = bath::second_law_gap(b, T, consts);
        per_t.push_back(r);
    }
    rep["temperatures"] = per_t;
    return rep;
}

}  // namespace qbt::sweep
