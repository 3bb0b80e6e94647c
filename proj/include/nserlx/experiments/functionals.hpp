#pragma once

#include "nserlx/solver/run.hpp"

namespace nserlx::experiments {

/// Discrete analogues of the a-priori functional X(t), the time-weighted
/// X_theta(t) and the rate functional Z(t), assembled from the per-block
/// norm history of a run.
struct FunctionalSeries {
    std::vector<double> times;
    std::vector<double> x;       // X(t), nondecreasing
    std::vector<double> xtheta;  // with weight tau^theta
    std::vector<double> z;       // with weights <tau>^{...} and exponent alpha
    double theta = 0.0;
    double alpha = 0.0;
    double eps = 0.1;
};

FunctionalSeries composite_functionals(const solver::RunResult& run, int d, double sigma0,
                                       double eps = 0.1);

}  // namespace nserlx::experiments
