#include "nserlx/solver/stepper.hpp"

#include <cmath>

namespace nserlx::solver {

namespace {
using model::FlowState;
using model::Tendencies;

void axpy(FlowState& y, double c, const Tendencies& k) {
    for (std::size_t s = 0; s < y.a.size(); ++s) {
        y.a.c[s] += c * k.da.c[s];
        y.b.c[s] += c * k.db.c[s];
    }
    for (int i = 0; i < y.grid.d; ++i)
        for (std::size_t s = 0; s < y.a.size(); ++s) {
            y.u[i].c[s] += c * k.du[i].c[s];
            y.w[i].c[s] += c * k.dw[i].c[s];
        }
}

void propagate(const linear::PropagatorTable& e, FlowState& y) { e.apply(y); }

void propagate(const linear::PropagatorTable& e, Tendencies& k) {
    e.apply(k.da, k.du, k.db, k.dw);
}

bool state_has_nan(const FlowState& y) {
    for (const SpectralField* f : y.all_spectral())
        if (has_nan(*f)) return true;
    return false;
}
}  // namespace

Stepper::Stepper(const Grid& grid, const model::ModelParams& params, Scheme scheme, double dt)
    : grid_(grid),
      scheme_(scheme),
      dt_(dt),
      dyn_(grid, params),
      e_full_(grid, dt, params),
      e_half_(grid, 0.5 * dt, params) {
    if (!(dt > 0.0)) throw DomainError("stepper: dt must be positive");
}

void Stepper::step(model::FlowState& state) {
    const double h = dt_;
    try {
        if (scheme_ == Scheme::IfRk2) {
            Tendencies k1 = dyn_.rhs_nonlinear(state);
            FlowState ya = state;
            axpy(ya, h, k1);
            propagate(e_full_, ya);
            Tendencies k2 = dyn_.rhs_nonlinear(ya);
            propagate(e_full_, state);
            propagate(e_full_, k1);
            axpy(state, 0.5 * h, k1);
            axpy(state, 0.5 * h, k2);
        } else {
            Tendencies k1 = dyn_.rhs_nonlinear(state);
            FlowState ya = state;
            axpy(ya, 0.5 * h, k1);
            propagate(e_half_, ya);
            Tendencies k2 = dyn_.rhs_nonlinear(ya);

            FlowState yb = state;
            propagate(e_half_, yb);
            axpy(yb, 0.5 * h, k2);
            Tendencies k3 = dyn_.rhs_nonlinear(yb);

            FlowState yc = state;
            propagate(e_full_, yc);
            Tendencies k3p = k3;
            propagate(e_half_, k3p);
            axpy(yc, h, k3p);
            Tendencies k4 = dyn_.rhs_nonlinear(yc);

            propagate(e_full_, state);
            propagate(e_full_, k1);
            Tendencies k2p = k2;
            propagate(e_half_, k2p);
            axpy(state, h / 6.0, k1);
            axpy(state, h / 3.0, k2p);
            axpy(state, h / 3.0, k3p);
            axpy(state, h / 6.0, k4);
        }
    } catch (const DomainError& err) {
        throw DomainError(std::string(err.what()) + " (during step " + std::to_string(steps_) + ")");
    }
    ++steps_;
    if (state_has_nan(state))
        throw DomainError("solver: NaN detected after step " + std::to_string(steps_));
}

double cfl_suggest(const model::FlowState& state, const SimConfig& config) {
    const Grid& g = config.grid;
    Transformer fft(g);
    RealField a = fft.to_physical(state.a);

    double vmax = 0.0;
    RealField tmp(g);
    for (int i = 0; i < g.d; ++i) {
        fft.to_physical(state.u[i], tmp);
        vmax = std::max(vmax, max_abs(tmp));
        fft.to_physical(state.w[i], tmp);
        vmax = std::max(vmax, max_abs(tmp));
    }
    double cs = 0.0, fmax = 0.0;
    for (double av : a.v) {
        cs = std::max(cs, config.params.p_prime(1.0 + av));
        fmax = std::max(fmax, std::abs(model::f_of(av)));
    }
    cs = std::sqrt(cs);

    double cap = 0.1;
    if (fmax > 0.0) {
        const double kcut = g.k_fund() * (g.N / 3.0) * std::sqrt(static_cast<double>(g.d));
        cap = std::min(cap, 0.25 / (fmax * config.params.mu * kcut * kcut));
    }
    double speed = std::max(std::max(vmax, cs), 0.0);
    if (speed == 0.0) return cap;
    return std::min(0.4 * g.dx() / speed, cap);
}

}  // namespace nserlx::solver
