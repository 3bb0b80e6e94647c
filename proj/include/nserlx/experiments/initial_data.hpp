#pragma once

#include "nserlx/lp/besov.hpp"
#include "nserlx/model/state.hpp"

namespace nserlx::experiments {

/// Random-phase initial data with a prescribed low-frequency Besov
/// profile: per-mode magnitude |k|^{-sigma0-d/2} under a smooth cutoff,
/// scaled so the composite norm X0 equals epsilon.
struct InitialDataSpec {
    double sigma0 = -1.0;
    double epsilon = 1e-3;
    uint64_t seed = 1;
    std::string components = "aubw";  // which of a, u, b, w receive data
    double cutoff = 1.0;              // envelope support ends at 8/3 * cutoff

    void validate(int d) const {
        if (!(sigma0 >= -0.5 * d && sigma0 < 0.5 * d - 1.0))
            throw DomainError("initial data: sigma0 must lie in [-d/2, d/2-1)");
        if (!(epsilon >= 0.0)) throw DomainError("initial data: epsilon must be nonnegative");
        if (components.empty()) throw DomainError("initial data: empty component set");
        for (char c : components)
            if (c != 'a' && c != 'u' && c != 'b' && c != 'w')
                throw DomainError("initial data: components must be a subset of 'aubw'");
    }
};

/// Composite norm X0 of the state: low-frequency composite in
/// B^{d/2-1}_{2,1} plus the high-frequency pieces at their natural
/// regularities.
double composite_x0(const model::FlowState& state, const lp::DyadicFilterBank& bank);

model::FlowState make_perturbation(const InitialDataSpec& spec, const Grid& grid);

}  // namespace nserlx::experiments
