#include "nserlx/lp/filter_bank.hpp"

#include <climits>
#include <cmath>

namespace nserlx::lp {

double smooth_step(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double a = std::exp(-1.0 / x);
    double b = std::exp(-1.0 / (1.0 - x));
    return a / (a + b);
}

double chi(double r) {
    // transition mapped affinely onto [3/4, 4/3]
    return smooth_step((4.0 / 3.0 - r) / (4.0 / 3.0 - 3.0 / 4.0));
}

double phi(double r) { return chi(0.5 * r) - chi(r); }

double partition_sum(double r, int j_lo, int j_hi) {
    double acc = 0.0;
    for (int j = j_lo; j <= j_hi; ++j) acc += phi(std::ldexp(r, -j));
    return acc;
}

DyadicFilterBank::DyadicFilterBank(const Grid& grid) : grid_(grid) {
    if (grid_.N < 8)
        throw DomainError("filter bank: resolution too small, N >= 8 required for a complete annulus");
    const double r_fund = grid_.k_fund();
    const double r_max = grid_.k_max();
    j_min_ = static_cast<int>(std::floor(std::log2(r_fund))) - 1;
    j_max_ = static_cast<int>(std::ceil(std::log2(r_max)));

    const std::size_t n = grid_.spec_size();
    jlo_.assign(n, INT_MIN);
    wlo_.assign(n, 0.0);
    whi_.assign(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        const double r = grid_.k_abs(s);
        if (r == 0.0) continue;
        // candidate blocks: phi(2^{-j} r) > 0 forces j in (log2(3r/8), log2(4r/3))
        const int j0 = static_cast<int>(std::floor(std::log2(r))) - 2;
        int first = INT_MIN;
        double w[2] = {0.0, 0.0};
        for (int j = j0; j <= j0 + 4; ++j) {
            double v = phi(std::ldexp(r, -j));
            if (v <= 0.0) continue;
            if (first == INT_MIN) {
                first = j;
                w[0] = v;
            } else if (j == first + 1) {
                w[1] = v;
            } else {
                throw DomainError("filter bank: non-adjacent blocks overlap (internal error)");
            }
        }
        if (first == INT_MIN || first < j_min_ || first + (w[1] > 0.0 ? 1 : 0) > j_max_)
            throw DomainError("filter bank: mode not covered by block range (internal error)");
        jlo_[s] = first;
        wlo_[s] = w[0];
        whi_[s] = w[1];
    }
}

double DyadicFilterBank::weight(std::size_t s, int j) const {
    if (jlo_[s] == INT_MIN) return 0.0;
    if (j == jlo_[s]) return wlo_[s];
    if (j == jlo_[s] + 1) return whi_[s];
    return 0.0;
}

double DyadicFilterBank::partition_defect() const {
    double worst = 0.0;
    for (std::size_t s = 0; s < jlo_.size(); ++s) {
        if (jlo_[s] == INT_MIN) continue;
        worst = std::max(worst, std::abs(wlo_[s] + whi_[s] - 1.0));
    }
    return worst;
}

double DyadicFilterBank::orthogonality_constant() const {
    double lo = 1.0;
    for (std::size_t s = 0; s < jlo_.size(); ++s) {
        if (jlo_[s] == INT_MIN) continue;
        lo = std::min(lo, wlo_[s] * wlo_[s] + whi_[s] * whi_[s]);
    }
    return 1.0 / lo;
}

DyadicFilterBank build_filter_bank(const Grid& grid) { return DyadicFilterBank(grid); }

SpectralField apply_block(const SpectralField& field, int j, const DyadicFilterBank& bank) {
    if (!(field.grid == bank.grid())) throw DomainError("apply_block: grid mismatch");
    if (j < bank.j_min() || j > bank.j_max())
        throw DomainError("apply_block: block index " + std::to_string(j) + " outside [" +
                          std::to_string(bank.j_min()) + ", " + std::to_string(bank.j_max()) + "]");
    SpectralField out(field.grid);
    for (std::size_t s = 0; s < field.size(); ++s) {
        double w = bank.weight(s, j);
        if (w != 0.0) out.c[s] = field.c[s] * w;
    }
    return out;
}

}  // namespace nserlx::lp
