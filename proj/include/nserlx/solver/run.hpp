#pragma once

#include <functional>
#include <map>

#include "nserlx/solver/stepper.hpp"

namespace nserlx::solver {

struct DiagnosticsRow {
    double t = 0.0;
    std::map<std::string, double> norms;
    double mean_a = 0.0;
    double total_n = 0.0;  // integral of n = e^b over the box
    double min_density = 0.0;
    std::map<std::string, double> energies;
};

struct RunSinks {
    std::function<void(const DiagnosticsRow&)> on_row;
    std::function<void(const model::FlowState&, double, int)> on_snapshot;
};

/// Everything a decay fit or functional assembly needs from a run.
struct RunResult {
    std::vector<double> times;  // cadence tick times (including t = 0)
    std::vector<DiagnosticsRow> rows;
    // per-tick block L2 norms of the tracked quantities
    std::vector<std::vector<double>> blocks_a, blocks_u, blocks_b, blocks_w, blocks_relvel;
    model::FlowState final_state;
    double tick_dt = 0.0;
    int j_min = 0, j_max = 0;
};

/// Integrate the given initial state to T, emitting diagnostics at the
/// cadence and optional log-spaced snapshots.
RunResult run(const SimConfig& config, const model::FlowState& initial,
              const RunSinks& sinks = {});

}  // namespace nserlx::solver
