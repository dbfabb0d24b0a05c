#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "risim/scenario.hpp"

namespace risim {

// One draw of every channel coefficient in the reduced (reference-antenna)
// model. Column k of g_matrix is the spatial signature of user k at the
// surface; d holds the direct user-to-BS coefficients.
struct ChannelRealization {
    Eigen::VectorXcd f;        // BS-RIS link, length n_elements
    Eigen::MatrixXcd g_matrix; // user-RIS links, n_elements x n_users
    Eigen::VectorXcd d;        // direct user-BS links, length n_users
    std::vector<std::array<double, 2>> user_positions;

    int n_elements() const { return static_cast<int>(f.size()); }
    int n_users() const { return static_cast<int>(d.size()); }
};

// Reduced realization expanded to an n_bs_antennas-element receive array
// using rank-one steering: row `reference_antenna` of f_matrix equals f,
// and the reference row of d_matrix equals d.
struct FullChannelRealization : ChannelRealization {
    Eigen::MatrixXcd f_matrix; // n_bs_antennas x n_elements
    Eigen::MatrixXcd d_matrix; // n_bs_antennas x n_users
    static constexpr int reference_antenna = 0;

    int n_bs_antennas() const { return static_cast<int>(f_matrix.rows()); }
};

// Three-slope empirical path loss in dB (a negative gain). Distances below
// the first breakpoint see a flat gain, distances between the breakpoints
// a 20 dB/decade slope, and distances beyond the second breakpoint a
// 35 dB/decade slope; the fixed term follows the COST-Hata urban formula
// evaluated at the configured carrier frequency and antenna heights, with
// distances entering in kilometers. Continuous at both breakpoints.
// Throws std::invalid_argument for non-positive distances.
double path_loss_three_slope(double distance_m, const ScenarioConfig& config);

// Line-of-sight BS-RIS gain in linear scale: 10^(ref_db/10) * d^(-exp),
// d in meters. Throws std::invalid_argument below the 1 m reference.
double ris_link_gain(double distance_m, const ScenarioConfig& config);

// Cell-center users uniform over [0, x2]^2 followed by cell-edge users
// uniform over [x1, x3]^2; deterministic in (config, seed).
std::vector<std::array<double, 2>> draw_user_positions(const ScenarioConfig& config,
                                                       std::uint64_t seed);

// Draws one complete channel realization. Per-user links are Rayleigh with
// large-scale power 10^((L+S)/10), L the three-slope loss toward the BS or
// the surface and S a per-link log-normal shadowing draw; the BS-RIS vector
// is Rician around a random-azimuth steering vector with the configured
// K-factor and no shadowing. The draw order is fixed (positions, per-user
// shadowing, d, G columns, then f), so identical (config, seed) pairs give
// bit-identical realizations.
ChannelRealization generate_realization(const ScenarioConfig& config, std::uint64_t seed);

// Expands a reduced realization to n_bs_antennas receive antennas with
// half-wavelength steering vectors (random angles per link, unit gain on
// the reference antenna).
FullChannelRealization expand_to_array(const ChannelRealization& base, int n_bs_antennas,
                                       std::uint64_t seed);

} // namespace risim
