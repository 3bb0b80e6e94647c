#pragma once

#include <vector>

#include "nserlx/core/errors.hpp"

namespace nserlx::experiments {

/// Fitted power law norm ~ C (1+t)^exponent over a time window.
struct DecayFit {
    double exponent = 0.0;
    double prefactor = 0.0;  // C
    double t_lo = 0.0, t_hi = 0.0;
    double r_squared = 0.0;
    double residual_max = 0.0;  // max |log norm - fit|
    int samples = 0;
};

/// Least squares on (log(1+t), log norm). Requires at least 10 samples
/// in the window and strictly positive norms.
DecayFit fit_power_law(const std::vector<double>& times, const std::vector<double>& norms,
                       double window_lo, double window_hi);

}  // namespace nserlx::experiments
