#pragma once

#include <string>

#include "nserlx/linear/decay_curve.hpp"

namespace nserlx::experiments {

/// Which decay theorem's rate table to read: bounded low-frequency data
/// (Decay13) or small low-frequency data (Decay14).
enum class Theorem { Decay13, Decay14 };

struct RateQuery {
    linear::DecayQuantity quantity = linear::DecayQuantity::Composite;
    double sigma = 0.0;         // regularity of the requested norm
    lp::SumExp r = lp::SumExp::One;
    lp::Band band = lp::Band::Low;
    int d = 2;
    double sigma0 = -1.0;
    Theorem theorem = Theorem::Decay13;
    double eps = 0.1;  // the free small constant of the Decay14 high-frequency rate
};

struct RateEntry {
    double exponent = 0.0;
    bool extrapolation = false;  // measured outside the theorem's hypotheses
    std::string note;
};

/// Theoretical decay exponent for the query; throws DomainError when the
/// query violates a hard hypothesis (sigma = sigma0, wrong summation
/// index for the quantity, sigma above the admissible cap...). Queries
/// the theorems do not cover but the harness can still measure (the
/// d = 2 relative-velocity line of Decay13) come back flagged as
/// extrapolation.
RateEntry theoretical_rate(const RateQuery& q);

}  // namespace nserlx::experiments
