#pragma once

#include <variant>

#include <json.hpp>

#include "qbt/damping.hpp"
#include "qbt/discrete_bath.hpp"
#include "qbt/thermo.hpp"

namespace qbt {

using json = nlohmann::json;

// Damping models:
//   {"model":"drude","gamma_o":...,"omega_d":...}
//   {"model":"ohmic","gamma_o":...}
//   {"parametrization":"w0-Omega-gamma","w0":...,"Omega":...,"gamma":...}
json to_json(const damping::DampingModel& model);
json to_json(const damping::DrudeParams& p);
std::variant<damping::DampingModel, damping::DrudeParams> model_from_json(const json& j);

// Bath: {"M":..., "omega_0":..., "oscillators":[{"m":...,"omega":...,"c":...}, ...]}
json to_json(const bath::DiscreteBath& b);
bath::DiscreteBath bath_from_json(const json& j);

// Divergent quantities are never plain numbers:
//   {"divergent":true,"cutoff_terms":N,"value_at_cutoff":x,"log_slope":s}
json to_json(const thermo::RegularizedValue& v);

// Flat record; absent fields omitted, divergent fields as objects.
json to_json(const thermo::ThermoPoint& pt);

}  // namespace qbt
