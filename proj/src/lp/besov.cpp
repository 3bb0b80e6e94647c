#include "nserlx/lp/besov.hpp"

#include <climits>
#include <cmath>

#include "nserlx/core/spectral_ops.hpp"

namespace nserlx::lp {

namespace {
double box_volume(const Grid& g) {
    double v = 1.0;
    for (int i = 0; i < g.d; ++i) v *= g.L;
    return v;
}

void accumulate_block_sq(const SpectralField& field, const DyadicFilterBank& bank,
                         std::vector<double>& sq) {
    const Grid& g = field.grid;
    for (std::size_t s = 0; s < field.size(); ++s) {
        int j = bank.lower_block(s);
        if (j == INT_MIN) continue;
        double p = g.mult(s) * std::norm(field.c[s]);
        double wl = bank.lower_weight(s);
        double wh = bank.upper_weight(s);
        sq[j - bank.j_min()] += p * wl * wl;
        if (wh != 0.0) sq[j + 1 - bank.j_min()] += p * wh * wh;
    }
}
}  // namespace

std::vector<double> block_l2_norms(const SpectralField& field, const DyadicFilterBank& bank) {
    if (!(field.grid == bank.grid())) throw DomainError("block norms: grid mismatch");
    std::vector<double> sq(bank.block_count(), 0.0);
    accumulate_block_sq(field, bank, sq);
    const double vol = box_volume(field.grid);
    for (auto& x : sq) x = std::sqrt(vol * x);
    return sq;
}

std::vector<double> block_l2_norms(const std::vector<SpectralField>& field,
                                   const DyadicFilterBank& bank) {
    std::vector<double> sq(bank.block_count(), 0.0);
    for (const auto& comp : field) {
        if (!(comp.grid == bank.grid())) throw DomainError("block norms: grid mismatch");
        accumulate_block_sq(comp, bank, sq);
    }
    const double vol = box_volume(bank.grid());
    for (auto& x : sq) x = std::sqrt(vol * x);
    return sq;
}

double besov_from_blocks(const std::vector<double>& block_norms, const BesovSpec& spec, int j_min) {
    double acc = 0.0;
    for (std::size_t i = 0; i < block_norms.size(); ++i) {
        int j = j_min + static_cast<int>(i);
        if (!band_contains(spec.band, j)) continue;
        double term = std::pow(2.0, spec.s * j) * block_norms[i];
        if (spec.r == SumExp::One)
            acc += term;
        else
            acc = std::max(acc, term);
    }
    return acc;
}

namespace {
void check_mean(const SpectralField& field, bool remove_mean) {
    if (remove_mean) return;
    double fluct = 0.0;
    const Grid& g = field.grid;
    for (std::size_t s = 1; s < field.size(); ++s) fluct += g.mult(s) * std::norm(field.c[s]);
    fluct = std::sqrt(fluct);
    double m = std::abs(field.c[0]);
    if (m > 1e-8 * fluct && m > 0.0)
        throw DomainError(
            "besov norm: field has a nonzero mean (homogeneous norms are defined modulo the zero "
            "mode); subtract the mean or opt into mean removal");
}
}  // namespace

double besov_norm(const SpectralField& field, const BesovSpec& spec, const DyadicFilterBank& bank,
                  bool remove_mean) {
    check_mean(field, remove_mean);
    return besov_from_blocks(block_l2_norms(field, bank), spec, bank.j_min());
}

double besov_norm(const std::vector<SpectralField>& field, const BesovSpec& spec,
                  const DyadicFilterBank& bank, bool remove_mean) {
    for (const auto& comp : field) check_mean(comp, remove_mean);
    return besov_from_blocks(block_l2_norms(field, bank), spec, bank.j_min());
}

std::pair<SpectralField, SpectralField> low_high_split(const SpectralField& field,
                                                       const DyadicFilterBank& bank) {
    if (!(field.grid == bank.grid())) throw DomainError("low_high_split: grid mismatch");
    SpectralField low(field.grid), high(field.grid);
    for (std::size_t s = 0; s < field.size(); ++s) {
        int j = bank.lower_block(s);
        if (j == INT_MIN) continue;  // zero mode belongs to neither part
        double wl = 0.0;
        if (j <= -1) wl += bank.lower_weight(s);
        if (j + 1 <= -1) wl += bank.upper_weight(s);
        low.c[s] = field.c[s] * wl;
        high.c[s] = field.c[s] - low.c[s];
    }
    return {std::move(low), std::move(high)};
}

double chemin_lerner_from_blocks(const std::vector<std::vector<double>>& series, double dt,
                                 TimeExp rho, const BesovSpec& spec, const DyadicFilterBank& bank) {
    if (series.empty()) throw DomainError("chemin-lerner norm: empty time series");
    const int nb = bank.block_count();
    std::vector<double> per_block(nb, 0.0);
    const std::size_t nt = series.size();
    for (int i = 0; i < nb; ++i) {
        double val = 0.0;
        switch (rho) {
            case TimeExp::Inf:
                for (std::size_t t = 0; t < nt; ++t) val = std::max(val, series[t].at(i));
                break;
            case TimeExp::One: {
                for (std::size_t t = 0; t < nt; ++t) {
                    double wq = (t == 0 || t + 1 == nt) ? 0.5 : 1.0;
                    val += wq * series[t].at(i);
                }
                val *= dt;
                break;
            }
            case TimeExp::Two: {
                for (std::size_t t = 0; t < nt; ++t) {
                    double wq = (t == 0 || t + 1 == nt) ? 0.5 : 1.0;
                    val += wq * series[t].at(i) * series[t].at(i);
                }
                val = std::sqrt(val * dt);
                break;
            }
        }
        per_block[i] = val;
    }
    return besov_from_blocks(per_block, spec, bank.j_min());
}

double chemin_lerner_norm(const std::vector<SpectralField>& series, double dt, TimeExp rho,
                          const BesovSpec& spec, const DyadicFilterBank& bank) {
    if (series.empty()) throw DomainError("chemin-lerner norm: empty time series");
    std::vector<std::vector<double>> blocks;
    blocks.reserve(series.size());
    for (const auto& f : series) blocks.push_back(block_l2_norms(f, bank));
    return chemin_lerner_from_blocks(blocks, dt, rho, spec, bank);
}

}  // namespace nserlx::lp
