#include "nserlx/experiments/functionals.hpp"

#include <cmath>

namespace nserlx::experiments {

namespace {
using lp::Band;
using lp::BesovSpec;
using lp::SumExp;

using Series = std::vector<std::vector<double>>;  // [tick][block]

/// Weighted Chemin-Lerner time norm over the prefix [0..upto]: per block
/// the L^rho-in-time norm of weight(t) * ||Delta_j .||, then the l^r sum.
double cl_weighted(const Series& hist, const std::vector<double>& wt, std::size_t upto, double dt,
                   lp::TimeExp rho, const BesovSpec& spec, int j_min) {
    const std::size_t nb = hist[0].size();
    std::vector<double> per_block(nb, 0.0);
    for (std::size_t i = 0; i < nb; ++i) {
        double val = 0.0;
        switch (rho) {
            case lp::TimeExp::Inf:
                for (std::size_t t = 0; t <= upto; ++t) val = std::max(val, wt[t] * hist[t][i]);
                break;
            case lp::TimeExp::One:
                for (std::size_t t = 0; t <= upto; ++t) {
                    double wq = (t == 0 || t == upto) ? 0.5 : 1.0;
                    val += wq * wt[t] * hist[t][i];
                }
                val *= dt;
                break;
            case lp::TimeExp::Two:
                for (std::size_t t = 0; t <= upto; ++t) {
                    double wq = (t == 0 || t == upto) ? 0.5 : 1.0;
                    double x = wt[t] * hist[t][i];
                    val += wq * x * x;
                }
                val = std::sqrt(val * dt);
                break;
        }
        per_block[i] = val;
    }
    return lp::besov_from_blocks(per_block, spec, j_min);
}

/// Plain L^inf-in-time of weight(t) * Besov norm over the prefix.
double sup_weighted_norm(const Series& hist, const std::vector<double>& wt, std::size_t upto,
                         const BesovSpec& spec, int j_min) {
    double val = 0.0;
    for (std::size_t t = 0; t <= upto; ++t)
        val = std::max(val, wt[t] * lp::besov_from_blocks(hist[t], spec, j_min));
    return val;
}
}  // namespace

FunctionalSeries composite_functionals(const solver::RunResult& run, int d, double sigma0,
                                       double eps) {
    if (run.times.empty()) throw DomainError("functionals: empty trajectory");
    const double hd = 0.5 * d;
    const int jm = run.j_min;
    const double dt = run.tick_dt;
    const std::size_t nt = run.times.size();

    FunctionalSeries out;
    out.times = run.times;
    out.eps = eps;
    out.theta = 0.5 * (hd + 1.0 - sigma0) + 0.25;
    out.alpha = 0.5 * (d + 1.0 - 2.0 * sigma0 - 2.0 * eps);

    std::vector<double> ones(nt, 1.0), wtheta(nt), wbracket_half(nt), wbr_alpha(nt),
        wt_alpha(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        double tau = run.times[t];
        double br = std::sqrt(1.0 + tau * tau);
        wtheta[t] = std::pow(tau, out.theta);
        wbracket_half[t] = std::sqrt(br);
        wbr_alpha[t] = std::pow(br, out.alpha);
        wt_alpha[t] = std::pow(tau, out.alpha);
    }

    const BesovSpec low_m1{hd - 1.0, SumExp::One, Band::Low};
    const BesovSpec low_p1{hd + 1.0, SumExp::One, Band::Low};
    const BesovSpec low_0{hd, SumExp::One, Band::Low};
    const BesovSpec high_a{hd, SumExp::One, Band::High};
    const BesovSpec high_u{hd - 1.0, SumExp::One, Band::High};
    const BesovSpec high_bw{hd + 1.0, SumExp::One, Band::High};
    const BesovSpec low_s0_inf{sigma0, SumExp::Inf, Band::Low};

    auto x_like = [&](const std::vector<double>& wt, std::size_t upto) {
        double v = 0.0;
        for (const Series* f : {&run.blocks_a, &run.blocks_u, &run.blocks_b, &run.blocks_w}) {
            v += cl_weighted(*f, wt, upto, dt, lp::TimeExp::Inf, low_m1, jm);
            v += cl_weighted(*f, wt, upto, dt, lp::TimeExp::One, low_p1, jm);
        }
        v += cl_weighted(run.blocks_relvel, wt, upto, dt, lp::TimeExp::One, low_0, jm);
        v += cl_weighted(run.blocks_relvel, wt, upto, dt, lp::TimeExp::Two, low_m1, jm);
        v += cl_weighted(run.blocks_a, wt, upto, dt, lp::TimeExp::Inf, high_a, jm);
        v += cl_weighted(run.blocks_u, wt, upto, dt, lp::TimeExp::Inf, high_u, jm);
        v += cl_weighted(run.blocks_b, wt, upto, dt, lp::TimeExp::Inf, high_bw, jm);
        v += cl_weighted(run.blocks_w, wt, upto, dt, lp::TimeExp::Inf, high_bw, jm);
        v += cl_weighted(run.blocks_a, wt, upto, dt, lp::TimeExp::One, high_a, jm);
        for (const Series* f : {&run.blocks_u, &run.blocks_b, &run.blocks_w})
            v += cl_weighted(*f, wt, upto, dt, lp::TimeExp::One, high_bw, jm);
        return v;
    };

    // sigma grids of the Z functional's sup terms
    std::vector<double> sig_hi, sig_mid;
    for (int i = 0; i <= 8; ++i) {
        sig_hi.push_back(sigma0 + eps + (hd + 1.0 - sigma0 - eps) * i / 8.0);
        sig_mid.push_back(sigma0 + eps + (hd - sigma0 - eps) * i / 8.0);
    }

    for (std::size_t upto = 0; upto < nt; ++upto) {
        out.x.push_back(x_like(ones, upto));
        out.xtheta.push_back(x_like(wtheta, upto));

        double z = 0.0;
        std::vector<double> wt(nt);
        for (double sig : sig_hi) {
            for (std::size_t t = 0; t <= upto; ++t)
                wt[t] = std::pow(std::sqrt(1.0 + run.times[t] * run.times[t]),
                                 0.5 * (sig - sigma0));
            BesovSpec sp{sig, SumExp::One, Band::Low};
            double v = 0.0;
            for (const Series* f : {&run.blocks_a, &run.blocks_u, &run.blocks_b, &run.blocks_w})
                v += sup_weighted_norm(*f, wt, upto, sp, jm);
            z = std::max(z, v);
        }
        z += sup_weighted_norm(run.blocks_relvel, wbracket_half, upto, low_s0_inf, jm);
        double zmid = 0.0;
        for (double sig : sig_mid) {
            for (std::size_t t = 0; t <= upto; ++t)
                wt[t] = std::pow(std::sqrt(1.0 + run.times[t] * run.times[t]),
                                 0.5 * (1.0 + sig - sigma0));
            BesovSpec sp{sig, SumExp::One, Band::Low};
            zmid = std::max(zmid, sup_weighted_norm(run.blocks_relvel, wt, upto, sp, jm));
        }
        z += zmid;
        z += cl_weighted(run.blocks_a, wbr_alpha, upto, dt, lp::TimeExp::Inf, high_a, jm);
        z += cl_weighted(run.blocks_u, wbr_alpha, upto, dt, lp::TimeExp::Inf, high_u, jm);
        z += cl_weighted(run.blocks_u, wt_alpha, upto, dt, lp::TimeExp::Inf, high_bw, jm);
        z += cl_weighted(run.blocks_b, wbr_alpha, upto, dt, lp::TimeExp::Inf, high_bw, jm);
        z += cl_weighted(run.blocks_w, wbr_alpha, upto, dt, lp::TimeExp::Inf, high_bw, jm);
        out.z.push_back(z);
    }
    return out;
}

}  // namespace nserlx::experiments
