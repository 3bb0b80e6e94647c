#pragma once

#include <vector>

#include "nserlx/lp/filter_bank.hpp"

namespace nserlx::lp {

enum class SumExp { One, Inf };
enum class Band { Low, High, All };  // low: j <= 0, high: j >= -1

/// Homogeneous Besov norm request with p fixed to 2.
struct BesovSpec {
    double s = 0.0;
    SumExp r = SumExp::One;
    Band band = Band::All;
};

inline bool band_contains(Band band, int j) {
    switch (band) {
        case Band::Low: return j <= 0;
        case Band::High: return j >= -1;
        default: return true;
    }
}

/// ||Delta_j field||_{L^2} for every block of the bank, in one pass over
/// the spectrum. Index i corresponds to j = bank.j_min() + i.
std::vector<double> block_l2_norms(const SpectralField& field, const DyadicFilterBank& bank);
/// Same for a multi-component field (root-sum-square across components).
std::vector<double> block_l2_norms(const std::vector<SpectralField>& field,
                                   const DyadicFilterBank& bank);

/// l^r sum of 2^{js} * norms[i] over the band, with block i at j = j_min + i.
double besov_from_blocks(const std::vector<double>& block_norms, const BesovSpec& spec, int j_min);

/// Homogeneous Besov norm. The zero mode never contributes; a field whose
/// mean exceeds 1e-8 of its fluctuation L^2 norm is rejected unless the
/// caller opts into mean removal.
double besov_norm(const SpectralField& field, const BesovSpec& spec, const DyadicFilterBank& bank,
                  bool remove_mean = false);
double besov_norm(const std::vector<SpectralField>& field, const BesovSpec& spec,
                  const DyadicFilterBank& bank, bool remove_mean = false);

/// (low, high) with low = sum_{j<=-1} Delta_j f, high = f - mean - low.
std::pair<SpectralField, SpectralField> low_high_split(const SpectralField& field,
                                                       const DyadicFilterBank& bank);

/// Discrete Chemin-Lerner norm of a uniformly sampled time series: per
/// block, the L^rho-in-time norm of ||Delta_j .||_{L^2} (trapezoid rule
/// for rho in {1,2}, max for rho = inf), then the weighted l^r sum.
/// `series` holds block_l2_norms vectors at consecutive samples.
enum class TimeExp { One, Two, Inf };
double chemin_lerner_from_blocks(const std::vector<std::vector<double>>& series, double dt,
                                 TimeExp rho, const BesovSpec& spec, const DyadicFilterBank& bank);

double chemin_lerner_norm(const std::vector<SpectralField>& series, double dt, TimeExp rho,
                          const BesovSpec& spec, const DyadicFilterBank& bank);

}  // namespace nserlx::lp
