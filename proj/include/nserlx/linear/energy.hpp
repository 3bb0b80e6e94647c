#pragma once

#include "nserlx/lp/besov.hpp"
#include "nserlx/model/state.hpp"

namespace nserlx::linear {

struct EnergyParams {
    double eta1 = 0.05;
    double eta2 = 0.05;
    double eta3 = 0.05;

    void validate() const {
        for (double e : {eta1, eta2, eta3})
            if (!(e >= 0.0 && e < 1.0)) throw DomainError("energy: eta must lie in [0,1)");
    }
};

struct EnergyValue {
    double e = 0.0;
    double d = 0.0;
};

/// Frequency-localized fields entering the functionals.
struct BlockFields {
    SpectralField a, b;
    std::vector<SpectralField> u, w;
};

BlockFields filter_state(const model::FlowState& state, int j, const lp::DyadicFilterBank& bank);

/// Low-frequency functional pair: E has the eta-weighted (u|grad a) and
/// (w|grad b) cross terms; D carries the full dissipation including the
/// ((u-w) - Lap u | grad a) coupling.
EnergyValue energy_E1_D1(const BlockFields& f, double eta1);
/// High-frequency pair with the extra 1/2 |grad a|^2 storage and 2^{-2j}
/// weights on the (b,w) cross terms.
EnergyValue energy_E2_D2(const BlockFields& f, int j, double eta2);
/// Damped-Euler pair for (b, w) alone.
EnergyValue energy_E3_D3(const BlockFields& f, int j, double eta3);

EnergyValue energy_E1_D1(const model::FlowState& s, int j, const lp::DyadicFilterBank& bank,
                         double eta1);
EnergyValue energy_E2_D2(const model::FlowState& s, int j, const lp::DyadicFilterBank& bank,
                         double eta2);
EnergyValue energy_E3_D3(const model::FlowState& s, int j, const lp::DyadicFilterBank& bank,
                         double eta3);

/// Exact time-balance sources: d/dt E1 + D1 = 0 and d/dt E2 + D2 = 0
/// along the linear flow, while d/dt E3 + D3 = (u_j | w_j); the balance
/// check subtracts this drag-coupling source.
double e3_source(const BlockFields& f);

/// Decay constants of the Gronwall forms at the default eta = 0.05,
/// pinned below the measured state-space minima of the (D, E) pencils:
/// min D1/(4^j E1) = 0.0618 over j <= 0, min D2/E2 = 0.0156 (worst at
/// j = -1), and min D3/E3 = 0.0607 on u-free states (trajectory minima
/// observed >= 0.149).
inline constexpr double kGronwallC1 = 0.05;
inline constexpr double kGronwallC2 = 0.01;
inline constexpr double kGronwallC3 = 0.02;

struct LyapunovReport {
    double max_balance_residual = 0.0;  // |dE/dt + D (- source)| scaled
    double max_gronwall_residual = 0.0; // dE/dt + c * rate * E, positive part, scaled
    double min_dissipation = 0.0;       // smallest D along the trajectory
};

/// Checks the Lyapunov identities along a uniformly sampled trajectory
/// of states (five or more samples; fourth-order central differences in
/// time). `which` selects the functional: 1, 2 or 3.
LyapunovReport lyapunov_residual(const std::vector<model::FlowState>& trajectory, double dt,
                                 int j, const lp::DyadicFilterBank& bank,
                                 const EnergyParams& etas, int which);

}  // namespace nserlx::linear
