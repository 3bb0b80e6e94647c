#pragma once

#include <string>
#include <vector>

#include "nserlx/core/grid.hpp"
#include "nserlx/lp/besov.hpp"
#include "nserlx/model/params.hpp"

namespace nserlx::solver {

enum class Scheme { IfRk2, IfRk4 };

/// One Besov diagnostic requested per cadence tick.
struct NormRequest {
    std::string field;  // a | u | b | w | composite | relvel
    lp::BesovSpec spec;
    std::string label;
};

struct SimConfig {
    Grid grid;
    model::ModelParams params;
    double dt = 1e-3;
    double T = 1.0;
    Scheme scheme = Scheme::IfRk2;
    int cadence = 10;  // diagnostic emission every `cadence` steps
    int snapshots = 0; // log-spaced raw snapshots (0 = none)
    std::string name = "run";

    // initial data
    double sigma0 = -1.0;
    double epsilon = 1e-3;
    uint64_t seed = 1;
    std::string components = "aubw";
    double cutoff = 1.0;

    std::vector<NormRequest> diagnostics;
    std::vector<int> energy_j;  // blocks at which to report E1/E2/E3

    void validate() const {
        grid.validate();
        params.validate();
        if (!(dt > 0.0)) throw DomainError("config: dt must be positive");
        if (!(T >= dt)) throw DomainError("config: T must be at least dt");
        if (cadence < 1) throw DomainError("config: cadence must be >= 1");
        if (snapshots < 0) throw DomainError("config: snapshots must be >= 0");
        if (!(epsilon >= 0.0)) throw DomainError("config: epsilon must be nonnegative");
        if (!(sigma0 >= -0.5 * grid.d && sigma0 < 0.5 * grid.d - 1.0))
            throw DomainError("config: sigma0 must lie in [-d/2, d/2-1) (decay-theorem hypothesis)");
    }
};

}  // namespace nserlx::solver
