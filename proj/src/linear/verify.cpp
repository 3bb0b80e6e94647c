#include "nserlx/linear/verify.hpp"

#include <cmath>

#include "nserlx/core/rng.hpp"
#include "nserlx/linear/propagator.hpp"
#include "nserlx/model/dynamics.hpp"

namespace nserlx::linear {

namespace {
std::vector<cplx> random_cvec(Rng& rng, int n) {
    std::vector<cplx> v(n);
    for (auto& z : v) z = cplx(rng.gaussian(), rng.gaussian());
    return v;
}
double sq(const std::vector<cplx>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return s;
}
}  // namespace

CheckRow check_key_inequality(int trials, uint64_t seed) {
    Rng rng(seed);
    double worst_margin = 1e300;
    double equality_dev = 0.0;
    for (int t = 0; t < trials; ++t) {
        auto u = random_cvec(rng, 16);
        auto w = random_cvec(rng, 16);
        std::vector<cplx> umw(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) umw[i] = u[i] - w[i];
        double lhs = sq(u) + sq(umw);
        double rhs = 0.5 * sq(w);
        worst_margin = std::min(worst_margin, (lhs - rhs) / std::max(rhs, 1e-300));

        // u = w/2: equality case
        for (std::size_t i = 0; i < u.size(); ++i) {
            u[i] = 0.5 * w[i];
            umw[i] = u[i] - w[i];
        }
        double ratio = (sq(u) + sq(umw)) / (0.5 * sq(w));
        equality_dev = std::max(equality_dev, std::abs(ratio - 1.0));
    }
    CheckRow row;
    row.name = "key inequality |u|^2+|u-w|^2 >= |w|^2/2";
    row.measured = std::min(worst_margin, -equality_dev);
    row.threshold = -1e-12;
    row.pass = worst_margin >= -1e-12 && equality_dev <= 1e-12;
    row.note = "worst margin " + std::to_string(worst_margin) + ", equality dev " +
               std::to_string(equality_dev);
    return row;
}

CheckRow check_velocity_dissipation(int trials_per_j, int j_lo, int j_hi, uint64_t seed) {
    Rng rng(seed);
    double worst = 1e300;
    for (int j = j_lo; j <= j_hi; ++j) {
        const double fourj = std::pow(4.0, j);
        for (int t = 0; t < trials_per_j; ++t) {
            auto u = random_cvec(rng, 16);
            auto w = random_cvec(rng, 16);
            std::vector<cplx> umw(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) umw[i] = u[i] - w[i];
            double lhs = sq(umw) + fourj * sq(u);
            if (j <= 0) {
                double rhs = 0.5 * fourj * sq(w);
                worst = std::min(worst, (lhs - rhs) / std::max(rhs, 1e-300));
            }
            if (j >= -1) {
                double rhs = 0.125 * sq(w);
                worst = std::min(worst, (lhs - rhs) / std::max(rhs, 1e-300));
            }
        }
    }
    CheckRow row;
    row.name = "velocity dissipation inequality (both branches)";
    row.measured = worst;
    row.threshold = -1e-12;
    row.pass = worst >= -1e-12;
    return row;
}

namespace {
/// Random real field supported in one dyadic block.
SpectralField random_block_field(const Grid& grid, const lp::DyadicFilterBank& bank, int j,
                                 Rng& rng) {
    SpectralField f(grid);
    for (std::size_t s = 0; s < f.size(); ++s) {
        double w = bank.weight(s, j);
        if (w == 0.0) continue;
        f.c[s] = cplx(rng.gaussian(), rng.gaussian()) * w;
    }
    impose_hermitian(f);
    return f;
}

BlockFields random_block_state(const Grid& grid, const lp::DyadicFilterBank& bank, int j,
                               Rng& rng) {
    BlockFields f;
    f.a = random_block_field(grid, bank, j, rng);
    f.b = random_block_field(grid, bank, j, rng);
    for (int i = 0; i < grid.d; ++i) {
        f.u.push_back(random_block_field(grid, bank, j, rng));
        f.w.push_back(random_block_field(grid, bank, j, rng));
    }
    return f;
}
}  // namespace

CheckRow check_equivalence_E1(const Grid& grid, const lp::DyadicFilterBank& bank, int j_lo,
                              int j_hi, int fields_per_j, double eta1, uint64_t seed) {
    Rng rng(seed);
    double worst = 1e300;
    for (int j = j_lo; j <= j_hi; ++j) {
        for (int t = 0; t < fields_per_j; ++t) {
            BlockFields f = random_block_state(grid, bank, j, rng);
            double l2sq = 0.0;
            l2sq += std::pow(l2_norm(f.a), 2) + std::pow(l2_norm(f.b), 2);
            l2sq += std::pow(l2_norm(f.u), 2) + std::pow(l2_norm(f.w), 2);
            double e = energy_E1_D1(f, eta1).e;
            double lo = (0.5 - 4.0 * eta1 / 3.0) * l2sq;
            double hi = (0.5 + 4.0 * eta1 / 3.0) * l2sq;
            worst = std::min(worst, (e - lo) / l2sq);
            worst = std::min(worst, (hi - e) / l2sq);
        }
    }
    CheckRow row;
    row.name = "low-frequency energy equivalence (two-sided)";
    row.measured = worst;
    row.threshold = -1e-12;
    row.pass = worst >= -1e-12;
    return row;
}

CheckRow check_equivalence_E3(const Grid& grid, const lp::DyadicFilterBank& bank, int j_lo,
                              int j_hi, int fields_per_j, double eta3, uint64_t seed) {
    Rng rng(seed);
    double worst = 1e300;
    for (int j = j_lo; j <= j_hi; ++j) {
        for (int t = 0; t < fields_per_j; ++t) {
            BlockFields f = random_block_state(grid, bank, j, rng);
            double l2sq = std::pow(l2_norm(f.b), 2) + std::pow(l2_norm(f.w), 2);
            double e = energy_E3_D3(f, j, eta3).e;
            double lo = (0.5 - 2.0 * eta3) * l2sq;
            double hi = (0.5 + 2.0 * eta3) * l2sq;
            worst = std::min(worst, (e - lo) / l2sq);
            worst = std::min(worst, (hi - e) / l2sq);
        }
    }
    CheckRow row;
    row.name = "damped-Euler energy equivalence (two-sided)";
    row.measured = worst;
    row.threshold = -1e-12;
    row.pass = worst >= -1e-12;
    return row;
}

CheckRow check_dissipativity(const model::ModelParams& params, double xi_lo, double xi_hi,
                             int count) {
    double worst = -1e300;
    for (int i = 0; i < count; ++i) {
        double xi = xi_lo * std::pow(xi_hi / xi_lo, static_cast<double>(i) / (count - 1));
        for (const auto& ev : symbol_eigenvalues(symbol_blocks(xi, params)))
            worst = std::max(worst, ev.real());
    }
    CheckRow row;
    row.name = "symbol dissipativity (max Re lambda)";
    row.measured = worst;
    row.threshold = 1e-12;
    row.pass = worst <= 1e-12;
    return row;
}

CheckRow check_spectrum_at_zero(const model::ModelParams& params) {
    auto ev = symbol_eigenvalues(symbol_blocks(0.0, params));
    const double twoK = 2.0 * params.kappa;
    // sorted by descending real part within each block
    double dev = 0.0;
    for (int i = 0; i < 3; ++i) dev = std::max(dev, std::abs(ev[i]));
    dev = std::max(dev, std::abs(ev[3] + twoK));
    dev = std::max(dev, std::abs(ev[4]));
    dev = std::max(dev, std::abs(ev[5] + twoK));
    CheckRow row;
    row.name = "spectrum at xi = 0 is {0,0,0,-2k} + {0,-2k}";
    row.measured = dev;
    row.threshold = 1e-12;
    row.pass = dev <= 1e-12;
    return row;
}

CheckRow check_full_vs_reduced(const model::ModelParams& params, int d, int trials,
                               uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        std::vector<double> k(d);
        double xi2 = 0.0;
        for (auto& ki : k) {
            ki = 2.0 * (rng.uniform() - 0.5) * std::pow(10.0, 3.0 * (rng.uniform() - 0.5));
            xi2 += ki * ki;
        }
        double xi = std::sqrt(xi2);
        auto reduced = symbol_eigenvalues(symbol_blocks(xi, params));
        // multiset: 4 compressible + (d-1) copies of each solenoidal eigenvalue
        std::vector<std::complex<double>> expect(reduced.begin(), reduced.begin() + 4);
        for (int c = 0; c < d - 1; ++c) {
            expect.push_back(reduced[4]);
            expect.push_back(reduced[5]);
        }
        auto full = sorted_eigenvalues(full_symbol(k, params));
        double scale = std::max(1.0, xi * xi);
        // greedy closest matching (sorting ties on conjugate pairs are
        // sensitive to last-ulp real-part differences)
        std::vector<bool> used(expect.size(), false);
        for (const auto& ev : full) {
            double best = 1e300;
            std::size_t at = 0;
            for (std::size_t i = 0; i < expect.size(); ++i) {
                if (used[i]) continue;
                double dist = std::abs(ev - expect[i]);
                if (dist < best) {
                    best = dist;
                    at = i;
                }
            }
            used[at] = true;
            worst = std::max(worst, best / scale);
        }
    }
    CheckRow row;
    row.name = "full symbol matches Helmholtz reduction (d=" + std::to_string(d) + ")";
    row.measured = worst;
    row.threshold = 1e-8;
    row.pass = worst <= 1e-8;
    return row;
}

model::FlowState random_state(const Grid& grid, uint64_t seed, double amplitude,
                              bool full_band) {
    Rng rng(seed);
    std::size_t band = 0;
    for (std::size_t s = 1; s < grid.spec_size(); ++s)
        if (full_band || grid.in_dealias_band(s)) band += static_cast<std::size_t>(grid.mult(s));
    const double scale = amplitude / std::sqrt(static_cast<double>(band));

    model::FlowState st(grid);
    for (SpectralField* f : st.all_spectral()) {
        for (std::size_t s = 1; s < f->size(); ++s) {
            if (!full_band && !grid.in_dealias_band(s)) continue;
            f->c[s] = scale * cplx(rng.gaussian(), rng.gaussian());
        }
        impose_hermitian(*f);
        subtract_mean(*f);
    }
    return st;
}

CheckRow check_semigroup_property(const model::ModelParams& params, uint64_t seed) {
    Grid grid(2, 16, 2.0 * M_PI);
    model::FlowState st = random_state(grid, seed, 1.0);
    const double s = 0.37, t = 1.21;
    model::FlowState two_step = linear_propagate(linear_propagate(st, s, params), t, params);
    model::FlowState one_step = linear_propagate(st, s + t, params);
    double num = 0.0, den = 0.0;
    auto va = two_step.all_spectral();
    auto vb = one_step.all_spectral();
    for (std::size_t i = 0; i < va.size(); ++i) {
        for (std::size_t q = 0; q < va[i]->size(); ++q) {
            num = std::max(num, std::abs(va[i]->c[q] - vb[i]->c[q]));
            den = std::max(den, std::abs(vb[i]->c[q]));
        }
    }
    CheckRow row;
    row.name = "semigroup property exp(sL)exp(tL) = exp((s+t)L)";
    row.measured = num / den;
    row.threshold = 1e-10;
    row.pass = row.measured <= 1e-10;
    return row;
}

VerifyReport run_verification_suite(uint64_t seed) {
    model::ModelParams params;
    VerifyReport rep;
    rep.rows.push_back(check_key_inequality(10000, seed));
    rep.rows.push_back(check_velocity_dissipation(10000, -4, 4, seed + 1));
    {
        Grid glow(2, 64, 64.0 * M_PI);
        auto bank = lp::build_filter_bank(glow);
        rep.rows.push_back(check_equivalence_E1(glow, bank, -4, 0, 200, 0.1, seed + 2));
        Grid ghigh(2, 64, 2.0 * M_PI);
        auto bank2 = lp::build_filter_bank(ghigh);
        rep.rows.push_back(check_equivalence_E3(ghigh, bank2, -1, 4, 200, 0.05, seed + 3));
    }
    rep.rows.push_back(check_dissipativity(params, 1e-3, 1e3, 512));
    rep.rows.push_back(check_spectrum_at_zero(params));
    rep.rows.push_back(check_full_vs_reduced(params, 2, 64, seed + 4));
    rep.rows.push_back(check_full_vs_reduced(params, 3, 64, seed + 5));
    rep.rows.push_back(check_semigroup_property(params, seed + 6));
    return rep;
}

}  // namespace nserlx::linear
