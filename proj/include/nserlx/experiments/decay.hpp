#pragma once

#include "nserlx/experiments/initial_data.hpp"
#include "nserlx/experiments/powerfit.hpp"
#include "nserlx/experiments/rate_table.hpp"
#include "nserlx/solver/run.hpp"

namespace nserlx::experiments {

enum class DecayKind { LinearContinuum, NonlinearTorus };

struct FitRequest {
    linear::DecayQuantity quantity = linear::DecayQuantity::Composite;
    double sigma = 0.0;
    lp::SumExp r = lp::SumExp::One;
};

struct DecayExperimentConfig {
    DecayKind kind = DecayKind::LinearContinuum;
    int d = 2;
    double sigma0 = -1.0;
    Theorem theorem = Theorem::Decay13;
    double eps = 0.1;
    double tolerance = 0.05;
    double window_lo = 10.0, window_hi = 1000.0;
    int time_samples = 33;
    double t_lo = 1.0, t_hi = 2000.0;
    std::vector<FitRequest> fits;

    // linear-continuum path
    linear::ContinuumSetup continuum;

    // nonlinear-torus path
    solver::SimConfig sim;
};

struct DecayReportRow {
    std::string quantity;
    double sigma = 0.0;
    lp::SumExp r = lp::SumExp::One;
    double theory = 0.0;
    DecayFit fit;
    double delta = 0.0;
    bool pass = false;
    bool informational = false;  // torus fits and extrapolations carry no hard verdict
    std::string note;
};

struct DecayReport {
    std::vector<DecayReportRow> rows;
    std::vector<double> times;
    std::vector<std::pair<std::string, std::vector<double>>> curves;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.informational && !r.pass) return false;
        return true;
    }
};

std::vector<double> log_spaced_times(double lo, double hi, int n);

DecayReport decay_experiment(const DecayExperimentConfig& config);

}  // namespace nserlx::experiments
