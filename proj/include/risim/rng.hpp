#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace risim {

// Deterministic 64-bit seed mixing. mix_seed(master, i) is the i-th output
// of a SplitMix64 sequence started at `master`, so sub-streams derived for
// consecutive indices are decorrelated and identical across platforms.
// Used for per-trial and per-purpose sub-seeding: the same (master, index)
// pair always yields the same sub-seed, independent of evaluation order.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t x = master + 0x9E3779B97F4A7C15ULL * (index + 1ULL);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// SplitMix64 generator (Steele, Lea, Flood 2014). Chosen over std::mt19937
// because its output sequence is fully specified by this header: draws are
// bit-identical across compilers and platforms, which the simulator's
// reproducibility contract requires. Gaussian variates use Box-Muller on
// the raw uniforms (std::normal_distribution is implementation-defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t x = (state_ += 0x9E3779B97F4A7C15ULL);
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    // Uniform on [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1]; safe as a log() argument.
    double uniform_pos() { return static_cast<double>((next() >> 11) + 1ULL) * 0x1.0p-53; }

    // Standard normal via Box-Muller; generates pairs, caches the second.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double two_pi = 6.283185307179586476925286766559;
        double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        double phi = two_pi * uniform();
        spare_ = r * std::sin(phi);
        has_spare_ = true;
        return r * std::cos(phi);
    }

    // Circularly symmetric complex normal CN(0, 1): unit total variance,
    // independent real/imaginary parts of variance 1/2 each.
    std::complex<double> complex_gaussian() {
        double re = gaussian();
        double im = gaussian();
        return {re * 0.70710678118654752440, im * 0.70710678118654752440};
    }

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace risim
