#pragma once

#include <array>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace risim {

// Geometry, link-budget and scheme parameters of one simulated deployment.
// Defaults model a 500 m square cell: base station at the origin, the
// reflecting surface in the middle of the far cell edge, cell-center users
// uniform over [0, x2]^2 and cell-edge users uniform over [x1, x3]^2.
struct ScenarioConfig {
    int n_elements = 200;     // reflecting elements on the surface
    int n_users = 2;          // single-antenna uplink users
    int n_center_users = 1;
    int n_edge_users = 1;

    double ue_power_watts = 1.0;
    double noise_density_dbm_hz = -174.0;
    double noise_figure_db = 9.0;
    double bandwidth_hz = 1e6;

    double carrier_ghz = 1.9;
    double bs_height_m = 15.0;
    double ue_height_m = 1.65;
    double shadow_std_db = 8.0;

    // Line-of-sight BS-RIS link: gain_linear = 10^(ref_db/10) * d^(-exp),
    // d in meters, reference distance 1 m.
    double ris_pathloss_ref_db = -30.0;
    double ris_pathloss_exp = 2.0;
    double rician_factor = 5.0;

    double x1_m = 250.0;
    double x2_m = 300.0;
    double x3_m = 500.0;
    std::array<double, 2> breakpoints_m{10.0, 50.0};

    std::array<double, 2> bs_position{0.0, 0.0};
    std::array<double, 2> ris_position{500.0, 250.0};

    // Receiver noise power in watts:
    // 10^((density_dBm/Hz + 10 log10(BW) + NF - 30) / 10).
    double noise_power_watts() const;

    // Throws std::invalid_argument on an inconsistent configuration.
    void validate() const;
};

// JSON (de)serialization. Every field is optional and defaults as above;
// unknown keys are rejected with std::invalid_argument.
ScenarioConfig scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioConfig& config);

ScenarioConfig load_scenario_file(const std::string& path);

} // namespace risim
