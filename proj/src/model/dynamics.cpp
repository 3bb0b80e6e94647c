#include "nserlx/model/dynamics.hpp"

#include <cmath>

namespace nserlx::model {

FlowState reformulate(const RealField& rho, const std::vector<RealField>& u, const RealField& n,
                      const std::vector<RealField>& w, const Transformer& fft) {
    const Grid& g = fft.grid();
    FlowState st(g);
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!(rho.v[i] > 0.0))
            throw DomainError("reformulate: nonpositive fluid density at sample " + std::to_string(i));
        if (!(n.v[i] > 0.0))
            throw DomainError("reformulate: nonpositive particle density at sample " + std::to_string(i));
        st.a_phys.v[i] = rho.v[i] - 1.0;
        st.b_phys.v[i] = std::log(n.v[i]);
    }
    for (int c = 0; c < g.d; ++c) {
        st.u_phys[c] = u.at(c);
        st.w_phys[c] = w.at(c);
    }
    st.sync_spectral(fft);
    return st;
}

PrimitiveFields dereformulate(const FlowState& state, const Transformer& fft) {
    FlowState st = state;
    st.sync_physical(fft);
    PrimitiveFields out;
    out.rho = RealField(state.grid);
    out.n = RealField(state.grid);
    for (std::size_t i = 0; i < out.rho.size(); ++i) {
        out.rho.v[i] = 1.0 + st.a_phys.v[i];
        out.n.v[i] = std::exp(st.b_phys.v[i]);
    }
    out.u = st.u_phys;
    out.w = st.w_phys;
    return out;
}

Dynamics::Dynamics(const Grid& grid, const ModelParams& params)
    : grid_(grid), params_(params), fft_(grid) {
    params_.validate();
    params_.require_normalized_equilibrium();
}

void Dynamics::check_vacuum(const RealField& a_phys) const {
    double worst = 1e300;
    std::size_t at = 0;
    for (std::size_t i = 0; i < a_phys.size(); ++i) {
        double rho = 1.0 + a_phys.v[i];
        if (rho < worst) {
            worst = rho;
            at = i;
        }
    }
    if (worst < 1e-6)
        throw DomainError("vacuum: min(1+a) = " + std::to_string(worst) + " at grid point " +
                          std::to_string(at));
}

struct Dynamics::NonlinearParts {
    std::vector<SpectralField> au;    // a * u_i
    std::vector<SpectralField> nl_u;  // -u.grad u_i + G_i
    SpectralField nl_b;               // -w.grad b
    std::vector<SpectralField> nl_w;  // -w.grad w_i
    std::vector<SpectralField> G;     // G alone
};

Dynamics::NonlinearParts Dynamics::nonlinear_parts(const FlowState& state) const {
    const Grid& g = grid_;
    const int d = g.d;
    const std::size_t n = g.real_size();

    // physical copies of the state
    RealField a_p = fft_.to_physical(state.a);
    RealField b_p = fft_.to_physical(state.b);
    check_vacuum(a_p);
    std::vector<RealField> u_p(d), w_p(d);
    for (int i = 0; i < d; ++i) {
        fft_.to_physical(state.u[i], u_p[i]);
        fft_.to_physical(state.w[i], w_p[i]);
    }

    // spectral derivatives, then their physical samples
    SpectralField div_u = divergence(state.u);
    std::vector<RealField> grad_a_p(d), grad_b_p(d), lu_p(d);
    std::vector<std::vector<RealField>> grad_u_p(d), grad_w_p(d);
    const double mu = params_.mu, ml = params_.mu + params_.lambda;
    for (int i = 0; i < d; ++i) {
        grad_a_p[i] = fft_.to_physical(derivative(state.a, i));
        grad_b_p[i] = fft_.to_physical(derivative(state.b, i));
        SpectralField lu = laplacian(state.u[i]);
        for (auto& z : lu.c) z *= mu;
        if (ml != 0.0) {
            SpectralField gd = derivative(div_u, i);
            for (std::size_t s = 0; s < lu.size(); ++s) lu.c[s] += ml * gd.c[s];
        }
        lu_p[i] = fft_.to_physical(lu);
        grad_u_p[i].resize(d);
        grad_w_p[i].resize(d);
        for (int q = 0; q < d; ++q) {
            grad_u_p[i][q] = fft_.to_physical(derivative(state.u[i], q));
            grad_w_p[i][q] = fft_.to_physical(derivative(state.w[i], q));
        }
    }

    const double kappa = params_.kappa;
    NonlinearParts parts;
    parts.au.reserve(d);
    parts.nl_u.reserve(d);
    parts.nl_w.reserve(d);
    parts.G.reserve(d);

    RealField scratch(g), gterm(g);
    for (int i = 0; i < d; ++i) {
        for (std::size_t x = 0; x < n; ++x) scratch.v[x] = a_p.v[x] * u_p[i].v[x];
        parts.au.push_back(fft_.to_spectral(scratch));
        apply_dealias_mask(parts.au.back());

        for (std::size_t x = 0; x < n; ++x) {
            double a = a_p.v[x];
            double Gx = g_of(a, params_) * grad_a_p[i].v[x] + f_of(a) * lu_p[i].v[x] +
                        kappa * h_of(a, b_p.v[x]) * (u_p[i].v[x] - w_p[i].v[x]);
            gterm.v[x] = Gx;
            double adv = 0.0;
            for (int q = 0; q < d; ++q) adv += u_p[q].v[x] * grad_u_p[i][q].v[x];
            scratch.v[x] = -adv + Gx;
        }
        parts.nl_u.push_back(fft_.to_spectral(scratch));
        apply_dealias_mask(parts.nl_u.back());
        parts.G.push_back(fft_.to_spectral(gterm));
        apply_dealias_mask(parts.G.back());

        for (std::size_t x = 0; x < n; ++x) {
            double adv = 0.0;
            for (int q = 0; q < d; ++q) adv += w_p[q].v[x] * grad_w_p[i][q].v[x];
            scratch.v[x] = -adv;
        }
        parts.nl_w.push_back(fft_.to_spectral(scratch));
        apply_dealias_mask(parts.nl_w.back());
    }

    for (std::size_t x = 0; x < n; ++x) {
        double adv = 0.0;
        for (int q = 0; q < d; ++q) adv += w_p[q].v[x] * grad_b_p[q].v[x];
        scratch.v[x] = -adv;
    }
    parts.nl_b = fft_.to_spectral(scratch);
    apply_dealias_mask(parts.nl_b);
    return parts;
}

Tendencies Dynamics::rhs_linear(const FlowState& state) const {
    const Grid& g = grid_;
    Tendencies out(g);
    const double kf = g.k_fund();
    const double pp = params_.p_prime(1.0);
    const double kappa = params_.kappa;
    const double mu = params_.mu, ml = params_.mu + params_.lambda;
    for (std::size_t s = 0; s < state.a.size(); ++s) {
        auto m = g.mode(s);
        cplx ika[3], div_u(0, 0), div_w(0, 0);
        double k2 = 0.0;
        for (int i = 0; i < g.d; ++i) {
            double ki = kf * m[i];
            k2 += ki * ki;
            ika[i] = cplx(0.0, ki);
            div_u += ika[i] * state.u[i].c[s];
            div_w += ika[i] * state.w[i].c[s];
        }
        out.da.c[s] = -div_u;
        out.db.c[s] = -div_w;
        for (int i = 0; i < g.d; ++i) {
            out.du[i].c[s] = -pp * ika[i] * state.a.c[s] - mu * k2 * state.u[i].c[s] +
                             ml * ika[i] * div_u - kappa * (state.u[i].c[s] - state.w[i].c[s]);
            out.dw[i].c[s] =
                -ika[i] * state.b.c[s] - kappa * (state.w[i].c[s] - state.u[i].c[s]);
        }
    }
    return out;
}

Tendencies Dynamics::rhs_nonlinear(const FlowState& state) const {
    NonlinearParts nl = nonlinear_parts(state);
    const Grid& g = grid_;
    const double kf = g.k_fund();
    Tendencies out(g);
    for (std::size_t s = 0; s < out.da.size(); ++s) {
        auto m = g.mode(s);
        cplx div_au(0, 0);
        for (int i = 0; i < g.d; ++i) div_au += cplx(0.0, kf * m[i]) * nl.au[i].c[s];
        out.da.c[s] = -div_au;
        out.db.c[s] = nl.nl_b.c[s];
        for (int i = 0; i < g.d; ++i) {
            out.du[i].c[s] = nl.nl_u[i].c[s];
            out.dw[i].c[s] = nl.nl_w[i].c[s];
        }
    }
    return out;
}

Tendencies Dynamics::rhs(const FlowState& state) const {
    Tendencies out = rhs_linear(state);
    Tendencies nl = rhs_nonlinear(state);
    for (std::size_t s = 0; s < out.da.size(); ++s) {
        out.da.c[s] += nl.da.c[s];
        out.db.c[s] += nl.db.c[s];
        for (int i = 0; i < grid_.d; ++i) {
            out.du[i].c[s] += nl.du[i].c[s];
            out.dw[i].c[s] += nl.dw[i].c[s];
        }
    }
    return out;
}

std::vector<SpectralField> Dynamics::nonlinear_G(const FlowState& state) const {
    return nonlinear_parts(state).G;
}

double Dynamics::relative_velocity_residual(const FlowState& state) const {
    Tendencies t = rhs(state);
    NonlinearParts nl = nonlinear_parts(state);

    // right-hand side of the damped relative-velocity equation:
    //   -2 kappa (u-w) - P'(1) grad a + Lu + grad b - u.grad u + w.grad w + G
    const Grid& g = grid_;
    const double kappa = params_.kappa;
    const double pp = params_.p_prime(1.0);
    const double mu = params_.mu, ml = params_.mu + params_.lambda;
    SpectralField div_u = divergence(state.u);

    double worst = 0.0;
    for (int i = 0; i < g.d; ++i) {
        SpectralField expr(g);
        SpectralField ga = derivative(state.a, i);
        SpectralField gb = derivative(state.b, i);
        SpectralField lu = laplacian(state.u[i]);
        SpectralField gd = derivative(div_u, i);
        for (std::size_t s = 0; s < expr.size(); ++s) {
            // -u.grad u + G = nl_u; the extra w.grad w term is -nl_w
            expr.c[s] = -2.0 * kappa * (state.u[i].c[s] - state.w[i].c[s]) - pp * ga.c[s] +
                        mu * lu.c[s] + ml * gd.c[s] + gb.c[s] + nl.nl_u[i].c[s] - nl.nl_w[i].c[s];
        }
        SpectralField diff(g);
        for (std::size_t s = 0; s < expr.size(); ++s)
            diff.c[s] = t.du[i].c[s] - t.dw[i].c[s] - expr.c[s];
        worst = std::max(worst, max_abs(fft_.to_physical(diff)));
    }
    return worst;
}

}  // namespace nserlx::model
