#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace nserlx {

/// Seeded generator with implementation-independent gaussian and uniform
/// draws, so identical seeds give bit-identical fields.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    /// Uniform in [0,1).
    double uniform() {
        return (eng_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (deterministic across platforms,
    /// unlike std::normal_distribution).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double th = 2.0 * M_PI * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    /// Uniform phase on the unit circle.
    std::pair<double, double> unit_phase() {
        double th = 2.0 * M_PI * uniform();
        return {std::cos(th), std::sin(th)};
    }

    uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace nserlx
