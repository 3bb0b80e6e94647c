#pragma once

#include <vector>

#include "nserlx/core/field.hpp"

namespace nserlx::lp {

/// Smooth step: 0 at x<=0, 1 at x>=1, strictly increasing in between.
double smooth_step(double x);

/// Radial low-pass profile: chi(r)=1 for r<=3/4, chi(r)=0 for r>=4/3,
/// smooth and non-increasing across the transition.
double chi(double r);

/// Annulus profile phi(r) = chi(r/2) - chi(r), supported in [3/4, 8/3].
double phi(double r);

/// Sum of phi(2^{-j} r) over j in [j_lo, j_hi].
double partition_sum(double r, int j_lo, int j_hi);

/// Dyadic filter bank sampled on a grid's wavevectors. Every nonzero
/// mode lies in the support of at most two consecutive blocks; the bank
/// stores, per mode, the lower contributing block index and both weights.
class DyadicFilterBank {
public:
    explicit DyadicFilterBank(const Grid& grid);

    const Grid& grid() const { return grid_; }
    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }
    int block_count() const { return j_max_ - j_min_ + 1; }

    /// phi(2^{-j}|k|) for the mode at flat index s; 0 outside [j_min, j_max].
    double weight(std::size_t s, int j) const;

    /// Per-mode lower block index (INT_MIN for the zero mode) and weights.
    int lower_block(std::size_t s) const { return jlo_[s]; }
    double lower_weight(std::size_t s) const { return wlo_[s]; }
    double upper_weight(std::size_t s) const { return whi_[s]; }

    /// Largest |sum_j phi - 1| over all nonzero grid modes.
    double partition_defect() const;

    /// 1 / min_k sum_j phi^2, the almost-orthogonality constant of the bank.
    double orthogonality_constant() const;

private:
    Grid grid_;
    int j_min_ = 0;
    int j_max_ = 0;
    std::vector<int> jlo_;
    std::vector<double> wlo_, whi_;
};

DyadicFilterBank build_filter_bank(const Grid& grid);

/// Spectrum multiplied pointwise by phi(2^{-j}|k|).
SpectralField apply_block(const SpectralField& field, int j, const DyadicFilterBank& bank);

}  // namespace nserlx::lp
