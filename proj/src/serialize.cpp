#include "qbt/serialize.hpp"

#include <algorithm>
#include <string>

namespace qbt {

namespace {

double require_positive_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError(std::string("missing or non-numeric field \"") + key + "\"");
    const double v = j[key].get<double>();
    if (!(v > 0.0)) throw ConfigError(std::string("field \"") + key + "\" must be positive");
    return v;
}

}  // namespace

json to_json(const damping::DampingModel& model) {
    if (model.kind == damping::BathKind::Drude)
        return json{{"model", "drude"}, {"gamma_o", model.gamma_o}, {"omega_d", model.omega_d}};
    return json{{"model", "ohmic"}, {"gamma_o", model.gamma_o}};
}

json to_json(const damping::DrudeParams& p) {
    return json{{"parametrization", "w0-Omega-gamma"},
                {"w0", p.w0},
                {"Omega", p.Omega},
                {"gamma", p.gamma}};
}

std::variant<damping::DampingModel, damping::DrudeParams> model_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("model: expected a JSON object");
    if (j.contains("parametrization")) {
        if (j["parametrization"] != "w0-Omega-gamma")
            throw ConfigError("model: unknown parametrization \"" +
                              j["parametrization"].get<std::string>() + "\"");
        return damping::drude_params(require_positive_number(j, "w0"),
                                     require_positive_number(j, "Omega"),
                                     require_positive_number(j, "gamma"));
    }
    if (!j.contains("model") || !j["model"].is_string())
        throw ConfigError("model: missing \"model\" tag");
    const std::string kind = j["model"].get<std::string>();
    if (kind == "drude")
        return damping::DampingModel::drude(require_positive_number(j, "gamma_o"),
                                            require_positive_number(j, "omega_d"));
    if (kind == "ohmic")
        return damping::DampingModel::ohmic(require_positive_number(j, "gamma_o"));
    throw ConfigError("model: unknown model \"" + kind + "\"");
}

json to_json(const bath::DiscreteBath& b) {
    json osc = json::array();
    for (const auto& o : b.oscillators)
        osc.push_back(json{{"m", o.m}, {"omega", o.omega}, {"c", o.c}});
    return json{{"M", b.M}, {"omega_0", b.omega_0}, {"oscillators", osc}};
}

bath::DiscreteBath bath_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("bath: expected a JSON object");
    bath::DiscreteBath b;
    b.M = require_positive_number(j, "M");
    b.omega_0 = require_positive_number(j, "omega_0");
    if (!j.contains("oscillators") || !j["oscillators"].is_array())
        throw ConfigError("bath: missing \"oscillators\" array");
    for (const auto& o : j["oscillators"]) {
        if (!o.is_object() || !o.contains("c") || !o["c"].is_number())
            throw ConfigError("bath: each oscillator needs numeric m, omega, c");
        b.oscillators.push_back({require_positive_number(o, "m"),
                                 require_positive_number(o, "omega"),
                                 o["c"].get<double>()});
    }
    std::sort(b.oscillators.begin(), b.oscillators.end(),
              [](const bath::Oscillator& a, const bath::Oscillator& c) { return a.omega < c.omega; });
    b.validate();
    return b;
}

json to_json(const thermo::RegularizedValue& v) {
    json j{{"divergent", v.divergent},
           {"cutoff_terms", v.cutoff_terms},
           {"value_at_cutoff", v.value}};
    if (v.log_slope) j["log_slope"] = *v.log_slope;
    return j;
}

json to_json(const thermo::ThermoPoint& pt) {
    json j{{"T", pt.T}, {"e_free", pt.e_free}, {"f_free", pt.f_free}};
    if (pt.E_s) j["E_s"] = *pt.E_s;
    if (pt.F_cal) j["F_cal"] = *pt.F_cal;
    if (pt.E_cal) j["E_cal"] = *pt.E_cal;
    if (pt.F_s) j["F_s"] = *pt.F_s;
    if (pt.S_s) j["S_s"] = *pt.S_s;
    if (pt.K) j["K"] = *pt.K;
    if (pt.q_var) j["q_var"] = *pt.q_var;
    if (pt.v_var) j["v_var"] = to_json(*pt.v_var);
    if (pt.E_s_regularized) j["E_s_regularized"] = to_json(*pt.E_s_regularized);
    if (pt.dF_cal) j["dF_cal"] = *pt.dF_cal;
    return j;
}

}  // namespace qbt
