#include "risim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace risim {

double ScenarioConfig::noise_power_watts() const {
    double dbw = noise_density_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db - 30.0;
    return std::pow(10.0, dbw / 10.0);
}

void ScenarioConfig::validate() const {
    if (n_elements < 1) throw std::invalid_argument("n_elements must be >= 1");
    if (n_users < 1) throw std::invalid_argument("n_users must be >= 1");
    if (n_center_users < 0 || n_edge_users < 0)
        throw std::invalid_argument("user split counts must be >= 0");
    if (n_center_users + n_edge_users != n_users)
        throw std::invalid_argument("n_center_users + n_edge_users must equal n_users");
    if (!(ue_power_watts > 0.0)) throw std::invalid_argument("ue_power_watts must be > 0");
    if (rician_factor < 0.0) throw std::invalid_argument("rician_factor must be >= 0");
    if (!(x1_m < x3_m)) throw std::invalid_argument("x1_m must be < x3_m");
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth_hz must be > 0");
    if (!(breakpoints_m[0] > 0.0) || !(breakpoints_m[1] > breakpoints_m[0]))
        throw std::invalid_argument("breakpoints_m must satisfy 0 < d0 < d1");
    if (!(shadow_std_db >= 0.0)) throw std::invalid_argument("shadow_std_db must be >= 0");
    if (!(noise_power_watts() > 0.0))
        throw std::invalid_argument("derived noise power must be > 0");
}

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "n_elements",      "n_users",           "n_center_users", "n_edge_users",
        "ue_power_watts",  "noise_density_dbm_hz", "noise_figure_db", "bandwidth_hz",
        "carrier_ghz",     "bs_height_m",       "ue_height_m",    "shadow_std_db",
        "ris_pathloss_ref_db", "ris_pathloss_exp", "rician_factor",
        "x1_m",            "x2_m",              "x3_m",           "breakpoints_m",
        "bs_position",     "ris_position"};
    return keys;
}

std::array<double, 2> pair_from_json(const nlohmann::json& j, const char* key) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument(std::string("scenario key '") + key +
                                    "' must be an array of two numbers");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("scenario config must be a JSON object");
    for (const auto& item : j.items()) {
        if (known_keys().count(item.key()) == 0)
            throw std::invalid_argument("unknown scenario key '" + item.key() + "'");
    }
    ScenarioConfig c;
    auto get = [&j](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
    };
    get("n_elements", c.n_elements);
    get("n_users", c.n_users);
    get("n_center_users", c.n_center_users);
    get("n_edge_users", c.n_edge_users);
    get("ue_power_watts", c.ue_power_watts);
    get("noise_density_dbm_hz", c.noise_density_dbm_hz);
    get("noise_figure_db", c.noise_figure_db);
    get("bandwidth_hz", c.bandwidth_hz);
    get("carrier_ghz", c.carrier_ghz);
    get("bs_height_m", c.bs_height_m);
    get("ue_height_m", c.ue_height_m);
    get("shadow_std_db", c.shadow_std_db);
    get("ris_pathloss_ref_db", c.ris_pathloss_ref_db);
    get("ris_pathloss_exp", c.ris_pathloss_exp);
    get("rician_factor", c.rician_factor);
    get("x1_m", c.x1_m);
    get("x2_m", c.x2_m);
    get("x3_m", c.x3_m);
    if (j.contains("breakpoints_m")) c.breakpoints_m = pair_from_json(j["breakpoints_m"], "breakpoints_m");
    if (j.contains("bs_position")) c.bs_position = pair_from_json(j["bs_position"], "bs_position");
    if (j.contains("ris_position")) c.ris_position = pair_from_json(j["ris_position"], "ris_position");
    c.validate();
    return c;
}

nlohmann::json scenario_to_json(const ScenarioConfig& c) {
    return nlohmann::json{
        {"n_elements", c.n_elements},
        {"n_users", c.n_users},
        {"n_center_users", c.n_center_users},
        {"n_edge_users", c.n_edge_users},
        {"ue_power_watts", c.ue_power_watts},
        {"noise_density_dbm_hz", c.noise_density_dbm_hz},
        {"noise_figure_db", c.noise_figure_db},
        {"bandwidth_hz", c.bandwidth_hz},
        {"carrier_ghz", c.carrier_ghz},
        {"bs_height_m", c.bs_height_m},
        {"ue_height_m", c.ue_height_m},
        {"shadow_std_db", c.shadow_std_db},
        {"ris_pathloss_ref_db", c.ris_pathloss_ref_db},
        {"ris_pathloss_exp", c.ris_pathloss_exp},
        {"rician_factor", c.rician_factor},
        {"x1_m", c.x1_m},
        {"x2_m", c.x2_m},
        {"x3_m", c.x3_m},
        {"breakpoints_m", c.breakpoints_m},
        {"bs_position", c.bs_position},
        {"ris_position", c.ris_position}};
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    nlohmann::json j;
    in >> j;
    return scenario_from_json(j);
}

} // namespace risim
