#include "nserlx/experiments/powerfit.hpp"

#include <cmath>

namespace nserlx::experiments {

DecayFit fit_power_law(const std::vector<double>& times, const std::vector<double>& norms,
                       double window_lo, double window_hi) {
    if (times.size() != norms.size()) throw DomainError("fit: series length mismatch");
    if (!(window_lo < window_hi)) throw DomainError("fit: empty window");

    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < window_lo || times[i] > window_hi) continue;
        if (!(norms[i] > 0.0))
            throw DomainError("fit: nonpositive norm at t = " + std::to_string(times[i]));
        xs.push_back(std::log1p(times[i]));
        ys.push_back(std::log(norms[i]));
    }
    if (xs.size() < 10)
        throw DomainError("fit: need at least 10 samples in the window, got " +
                          std::to_string(xs.size()));

    const std::size_t n = xs.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (!(sxx > 0.0)) throw DomainError("fit: degenerate time window");

    DecayFit fit;
    fit.exponent = sxy / sxx;
    fit.prefactor = std::exp(my - fit.exponent * mx);
    fit.t_lo = window_lo;
    fit.t_hi = window_hi;
    fit.samples = static_cast<int>(n);
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double e = ys[i] - (my + fit.exponent * (xs[i] - mx));
        ss_res += e * e;
        fit.residual_max = std::max(fit.residual_max, std::abs(e));
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

}  // namespace nserlx::experiments
