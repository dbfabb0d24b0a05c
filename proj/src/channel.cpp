#include "risim/channel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "risim/rng.hpp"

namespace risim {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

double hata_fixed_term(const ScenarioConfig& c) {
    double f_mhz = c.carrier_ghz * 1e3;
    double lf = std::log10(f_mhz);
    return 46.3 + 33.9 * lf - 13.82 * std::log10(c.bs_height_m) -
           (1.1 * lf - 0.7) * c.ue_height_m + (1.56 * lf - 0.8);
}

double distance(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

} // namespace

double path_loss_three_slope(double distance_m, const ScenarioConfig& config) {
    if (!(distance_m > 0.0)) throw std::invalid_argument("path loss requires distance > 0");
    const double base = hata_fixed_term(config);
    const double d0_km = config.breakpoints_m[0] / 1000.0;
    const double d1_km = config.breakpoints_m[1] / 1000.0;
    const double d_km = distance_m / 1000.0;
    if (d_km > d1_km) return -base - 35.0 * std::log10(d_km);
    if (d_km > d0_km) return -base - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d_km);
    return -base - 15.0 * std::log10(d1_km) - 20.0 * std::log10(d0_km);
}

double ris_link_gain(double distance_m, const ScenarioConfig& config) {
    if (distance_m < 1.0)
        throw std::invalid_argument("ris_link_gain requires distance >= 1 m reference");
    return std::pow(10.0, config.ris_pathloss_ref_db / 10.0) *
           std::pow(distance_m, -config.ris_pathloss_exp);
}

std::vector<std::array<double, 2>> draw_user_positions(const ScenarioConfig& config,
                                                       std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::array<double, 2>> positions;
    positions.reserve(static_cast<std::size_t>(config.n_users));
    for (int k = 0; k < config.n_center_users; ++k) {
        double x = config.x2_m * rng.uniform();
        double y = config.x2_m * rng.uniform();
        positions.push_back({x, y});
    }
    const double edge_span = config.x3_m - config.x1_m;
    for (int k = 0; k < config.n_edge_users; ++k) {
        double x = config.x1_m + edge_span * rng.uniform();
        double y = config.x1_m + edge_span * rng.uniform();
        positions.push_back({x, y});
    }
    return positions;
}

ChannelRealization generate_realization(const ScenarioConfig& config, std::uint64_t seed) {
    config.validate();
    const int ns = config.n_elements;
    const int k_users = config.n_users;

    ChannelRealization out;
    out.user_positions = draw_user_positions(config, mix_seed(seed, 0));

    // All remaining randomness comes from one stream in a fixed order.
    SplitMix64 rng(mix_seed(seed, 1));

    // Per-link log-normal shadowing, drawn once per (user, endpoint) pair.
    Eigen::VectorXd shadow_bs(k_users), shadow_ris(k_users);
    for (int k = 0; k < k_users; ++k) shadow_bs(k) = config.shadow_std_db * rng.gaussian();
    for (int k = 0; k < k_users; ++k) shadow_ris(k) = config.shadow_std_db * rng.gaussian();

    out.d.resize(k_users);
    for (int k = 0; k < k_users; ++k) {
        double loss_db = path_loss_three_slope(distance(out.user_positions[k], config.bs_position),
                                               config) +
                         shadow_bs(k);
        double sigma = std::sqrt(std::pow(10.0, loss_db / 10.0));
        out.d(k) = sigma * rng.complex_gaussian();
    }

    out.g_matrix.resize(ns, k_users);
    for (int k = 0; k < k_users; ++k) {
        double loss_db = path_loss_three_slope(distance(out.user_positions[k], config.ris_position),
                                               config) +
                         shadow_ris(k);
        double sigma = std::sqrt(std::pow(10.0, loss_db / 10.0));
        for (int n = 0; n < ns; ++n) out.g_matrix(n, k) = sigma * rng.complex_gaussian();
    }

    // BS-RIS: Rician around a half-wavelength steering vector with random
    // azimuth; total average power matches the line-of-sight link gain.
    const double omega = ris_link_gain(distance(config.ris_position, config.bs_position), config);
    const double gamma = config.rician_factor;
    const double los_scale = std::sqrt(omega * gamma / (gamma + 1.0));
    const double nlos_scale = std::sqrt(omega / (gamma + 1.0));
    const double sin_az = std::sin(2.0 * kPi * rng.uniform());
    out.f.resize(ns);
    for (int n = 0; n < ns; ++n) {
        std::complex<double> los = std::polar(1.0, kPi * static_cast<double>(n) * sin_az);
        out.f(n) = los_scale * los + nlos_scale * rng.complex_gaussian();
    }
    return out;
}

FullChannelRealization expand_to_array(const ChannelRealization& base, int n_bs_antennas,
                                       std::uint64_t seed) {
    if (n_bs_antennas < 1) throw std::invalid_argument("n_bs_antennas must be >= 1");
    FullChannelRealization full;
    static_cast<ChannelRealization&>(full) = base;
    SplitMix64 rng(seed);

    auto steering = [&](double sin_az) {
        Eigen::VectorXcd a(n_bs_antennas);
        for (int m = 0; m < n_bs_antennas; ++m)
            a(m) = std::polar(1.0, kPi * static_cast<double>(m) * sin_az);
        return a;
    };

    // Common array response for the surface, one per direct user. Antenna 0
    // is the reference: its steering entry is exactly 1.
    Eigen::VectorXcd a_ris = steering(std::sin(2.0 * kPi * rng.uniform()));
    full.f_matrix = a_ris * base.f.transpose();
    full.d_matrix.resize(n_bs_antennas, base.n_users());
    for (int k = 0; k < base.n_users(); ++k)
        full.d_matrix.col(k) = steering(std::sin(2.0 * kPi * rng.uniform())) * base.d(k);
    return full;
}

} // namespace risim
