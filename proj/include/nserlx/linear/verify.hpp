#pragma once

#include <string>
#include <vector>

#include "nserlx/linear/energy.hpp"
#include "nserlx/linear/symbol.hpp"

namespace nserlx::linear {

struct CheckRow {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // worst value observed
    double threshold = 0.0;  // pass bound on `measured`
    std::string note;
};

struct VerifyReport {
    std::vector<CheckRow> rows;
    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

/// Key inequality ||u_j||^2 + ||(u-w)_j||^2 >= 1/2 ||w_j||^2 on random
/// complex block vectors; returns worst (negative = violation) margin
/// and the sharpness of the u = w/2 equality case.
CheckRow check_key_inequality(int trials, uint64_t seed);

/// Velocity-dissipation inequality: ||(u-w)_j||^2 + 4^j ||u_j||^2 >=
/// c 4^j ||w_j||^2 with c = 1/2 for j <= 0, and >= c ||w_j||^2 with
/// c = 1/8 for j >= -1.
CheckRow check_velocity_dissipation(int trials_per_j, int j_lo, int j_hi, uint64_t seed);

/// Two-sided energy equivalences (E1 within (1/2 +- 4 eta1/3) and E3
/// within (1/2 +- 2 eta3) of the block L2 energy) on random band-limited
/// fields drawn per block.
CheckRow check_equivalence_E1(const Grid& grid, const lp::DyadicFilterBank& bank, int j_lo,
                              int j_hi, int fields_per_j, double eta1, uint64_t seed);
CheckRow check_equivalence_E3(const Grid& grid, const lp::DyadicFilterBank& bank, int j_lo,
                              int j_hi, int fields_per_j, double eta3, uint64_t seed);

/// Max eigenvalue real part of both symbol blocks over a log grid of
/// frequencies, plus the exact spectra at xi = 0.
CheckRow check_dissipativity(const model::ModelParams& params, double xi_lo, double xi_hi,
                             int count);
CheckRow check_spectrum_at_zero(const model::ModelParams& params);

/// Reduced blocks versus the full (2d+2)x(2d+2) symbol on random
/// frequencies, compared through sorted eigenvalues.
CheckRow check_full_vs_reduced(const model::ModelParams& params, int d, int trials, uint64_t seed);

/// Semigroup property exp(sL) exp(tL) = exp((s+t)L) on a small grid.
CheckRow check_semigroup_property(const model::ModelParams& params, uint64_t seed);

/// Random state drawn on a grid (each component white in the retained
/// band), for verification drivers and tests. By default modes outside
/// the 2/3 dealias band stay empty, matching solver states; linear-only
/// checks may fill the full spectrum.
model::FlowState random_state(const Grid& grid, uint64_t seed, double amplitude = 1.0,
                              bool full_band = false);

/// The full default suite (used by the `verify` CLI subcommand).
VerifyReport run_verification_suite(uint64_t seed);

}  // namespace nserlx::linear
