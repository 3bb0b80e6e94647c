#include "nserlx/linear/energy.hpp"

#include <cmath>

namespace nserlx::linear {

BlockFields filter_state(const model::FlowState& state, int j, const lp::DyadicFilterBank& bank) {
    BlockFields f;
    f.a = lp::apply_block(state.a, j, bank);
    f.b = lp::apply_block(state.b, j, bank);
    for (int i = 0; i < state.grid.d; ++i) {
        f.u.push_back(lp::apply_block(state.u[i], j, bank));
        f.w.push_back(lp::apply_block(state.w[i], j, bank));
    }
    return f;
}

namespace {
struct Pieces {
    double a2, b2, u2, w2;          // squared L2 norms
    double ga2, gb2, gu2;           // |grad a|^2, |grad b|^2, |grad u|^2
    double divu2, divw2;            // |div u|^2, |div w|^2
    double uw2;                     // |u - w|^2
    double u_ga, w_gb;              // (u | grad a), (w | grad b)
    double uw_ga, wu_gb;            // (u-w | grad a), (w-u | grad b)
    double lapu_ga;                 // (Lap u | grad a)
    double u_w;                     // (u | w)
};

Pieces compute_pieces(const BlockFields& f) {
    const Grid& g = f.a.grid;
    const int d = g.d;
    const double kf = g.k_fund();
    double vol = 1.0;
    for (int i = 0; i < d; ++i) vol *= g.L;

    Pieces p{};
    for (std::size_t s = 0; s < f.a.size(); ++s) {
        auto m = g.mode(s);
        double k[3] = {0, 0, 0};
        double k2 = 0.0;
        for (int i = 0; i < d; ++i) {
            k[i] = kf * m[i];
            k2 += k[i] * k[i];
        }
        const double mult = g.mult(s) * vol;
        const cplx a = f.a.c[s], b = f.b.c[s];
        cplx ku(0, 0), kw(0, 0);  // sum_i k_i u_i, sum_i k_i w_i
        double u2 = 0, w2 = 0, uw2 = 0, uw = 0;
        for (int i = 0; i < d; ++i) {
            const cplx ui = f.u[i].c[s], wi = f.w[i].c[s];
            ku += k[i] * ui;
            kw += k[i] * wi;
            u2 += std::norm(ui);
            w2 += std::norm(wi);
            uw2 += std::norm(ui - wi);
            uw += ui.real() * wi.real() + ui.imag() * wi.imag();
        }
        p.a2 += mult * std::norm(a);
        p.b2 += mult * std::norm(b);
        p.u2 += mult * u2;
        p.w2 += mult * w2;
        p.uw2 += mult * uw2;
        p.u_w += mult * uw;
        p.ga2 += mult * k2 * std::norm(a);
        p.gb2 += mult * k2 * std::norm(b);
        p.gu2 += mult * k2 * u2;
        p.divu2 += mult * std::norm(ku);
        p.divw2 += mult * std::norm(kw);
        // (u | grad a) = Im(conj(a) sum k_i u_i) per mode
        const cplx ca = std::conj(a), cb = std::conj(b);
        p.u_ga += mult * (ca * ku).imag();
        p.w_gb += mult * (cb * kw).imag();
        p.uw_ga += mult * (ca * (ku - kw)).imag();
        p.wu_gb += mult * (cb * (kw - ku)).imag();
        p.lapu_ga += mult * (-k2) * (ca * ku).imag();
    }
    return p;
}
}  // namespace

EnergyValue energy_E1_D1(const BlockFields& f, double eta1) {
    Pieces p = compute_pieces(f);
    EnergyValue out;
    out.e = 0.5 * (p.a2 + p.u2 + p.b2 + p.w2) + eta1 * p.u_ga + eta1 * p.w_gb;
    out.d = p.gu2 + p.uw2 + eta1 * (p.ga2 - p.divu2 + p.uw_ga - p.lapu_ga) +
            eta1 * (p.gb2 - p.divw2 + p.wu_gb);
    return out;
}

EnergyValue energy_E2_D2(const BlockFields& f, int j, double eta2) {
    Pieces p = compute_pieces(f);
    const double s2 = std::pow(2.0, -2.0 * j);
    EnergyValue out;
    out.e = 0.5 * (p.a2 + p.u2 + p.b2 + p.w2) + eta2 * (0.5 * p.ga2 + p.u_ga) + eta2 * s2 * p.w_gb;
    out.d = p.gu2 + p.uw2 + eta2 * (p.ga2 - p.divu2 + p.uw_ga) +
            eta2 * s2 * (p.gb2 - p.divw2 + p.wu_gb);
    return out;
}

EnergyValue energy_E3_D3(const BlockFields& f, int j, double eta3) {
    Pieces p = compute_pieces(f);
    const double s2 = std::pow(2.0, -2.0 * j);
    EnergyValue out;
    out.e = 0.5 * (p.b2 + p.w2) + eta3 * s2 * p.w_gb;
    out.d = p.w2 + eta3 * s2 * (p.gb2 - p.divw2 + p.wu_gb);
    return out;
}

double e3_source(const BlockFields& f) { return compute_pieces(f).u_w; }

EnergyValue energy_E1_D1(const model::FlowState& s, int j, const lp::DyadicFilterBank& bank,
                         double eta1) {
    return energy_E1_D1(filter_state(s, j, bank), eta1);
}
EnergyValue energy_E2_D2(const model::FlowState& s, int j, const lp::DyadicFilterBank& bank,
                         double eta2) {
    return energy_E2_D2(filter_state(s, j, bank), j, eta2);
}
EnergyValue energy_E3_D3(const model::FlowState& s, int j, const lp::DyadicFilterBank& bank,
                         double eta3) {
    return energy_E3_D3(filter_state(s, j, bank), j, eta3);
}

LyapunovReport lyapunov_residual(const std::vector<model::FlowState>& trajectory, double dt,
                                 int j, const lp::DyadicFilterBank& bank,
                                 const EnergyParams& etas, int which) {
    if (trajectory.size() < 3) throw DomainError("lyapunov: trajectory needs at least 3 samples");
    etas.validate();

    std::vector<double> e(trajectory.size()), d(trajectory.size()), src(trajectory.size(), 0.0);
    for (std::size_t t = 0; t < trajectory.size(); ++t) {
        BlockFields f = filter_state(trajectory[t], j, bank);
        EnergyValue v;
        switch (which) {
            case 1: v = energy_E1_D1(f, etas.eta1); break;
            case 2: v = energy_E2_D2(f, j, etas.eta2); break;
            case 3:
                v = energy_E3_D3(f, j, etas.eta3);
                src[t] = e3_source(f);
                break;
            default: throw DomainError("lyapunov: functional index must be 1, 2 or 3");
        }
        e[t] = v.e;
        d[t] = v.d;
    }

    double escale = 0.0;
    for (double x : e) escale = std::max(escale, std::abs(x));
    if (escale == 0.0) escale = 1.0;
    const double rate = which == 1 ? kGronwallC1 * std::pow(4.0, j)
                                   : (which == 2 ? kGronwallC2 : kGronwallC3);

    LyapunovReport rep;
    rep.min_dissipation = d[0];
    for (double x : d) rep.min_dissipation = std::min(rep.min_dissipation, x);

    // fourth-order interior stencils when available, second-order otherwise
    const bool fourth = trajectory.size() >= 5;
    auto ddt = [&](std::size_t t) {
        if (fourth)
            return (-e[t + 2] + 8.0 * e[t + 1] - 8.0 * e[t - 1] + e[t - 2]) / (12.0 * dt);
        return (e[t + 1] - e[t - 1]) / (2.0 * dt);
    };
    const std::size_t t_lo = fourth ? 2 : 1;
    const std::size_t t_hi = trajectory.size() - (fourth ? 3 : 2);
    for (std::size_t t = t_lo; t <= t_hi; ++t) {
        double de = ddt(t);
        rep.max_balance_residual =
            std::max(rep.max_balance_residual, std::abs(de + d[t] - src[t]) / escale);
        double gr = de + rate * e[t] - src[t];
        rep.max_gronwall_residual = std::max(rep.max_gronwall_residual, gr / escale);
    }
    return rep;
}

}  // namespace nserlx::linear
