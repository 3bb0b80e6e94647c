#include "doctest.h"

#include <cmath>

#include "nserlx/core/rng.hpp"
#include "nserlx/linear/verify.hpp"
#include "nserlx/model/dynamics.hpp"

using namespace nserlx;
using model::Dynamics;
using model::FlowState;
using model::ModelParams;

namespace {
double max_field_amp(const FlowState& st) {
    double m = 0.0;
    for (const SpectralField* f : st.all_spectral())
        for (const auto& z : f->c) m = std::max(m, std::abs(z));
    return m;
}
}  // namespace

TEST_CASE("parameter validation") {
    ModelParams p;
    p.validate();
    p.mu = -1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = ModelParams{};
    p.lambda = -3.0;  // 2mu + lambda <= 0
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = ModelParams{};
    p.rho_bar = 2.0;
    CHECK_THROWS_AS(p.require_normalized_equilibrium(), DomainError);

    ModelParams gamma;
    gamma.pressure = model::PressureLaw::Gamma;
    gamma.gamma = 1.4;
    CHECK(gamma.p_prime(1.0) == doctest::Approx(1.0));
    CHECK(gamma.p(1.0) == doctest::Approx(1.0 / 1.4));
}

TEST_CASE("reformulate and dereformulate round trip") {
    Grid g(2, 32, 2.0 * M_PI);
    Transformer fft(g);

    RealField rho(g), n(g);
    std::vector<RealField> u(2, RealField(g)), w(2, RealField(g));
    for (auto& x : rho.v) x = 1.0;
    for (auto& x : n.v) x = 1.0;
    FlowState eq = model::reformulate(rho, u, n, w, fft);
    CHECK(max_field_amp(eq) == 0.0);

    for (auto& x : n.v) x = std::exp(1.0);
    FlowState st = model::reformulate(rho, u, n, w, fft);
    CHECK(st.b_phys.v[17] == doctest::Approx(1.0).epsilon(1e-14));

    // rho = 1 + 0.1 cos(k x)
    for (std::size_t i = 0; i < rho.size(); ++i) {
        double x = (i % g.N) * g.dx();
        rho.v[i] = 1.0 + 0.1 * std::cos(x);
        n.v[i] = 1.0 + 0.05 * std::sin(2.0 * x);
        u[0].v[i] = 0.02 * std::sin(x);
    }
    FlowState st2 = model::reformulate(rho, u, n, w, fft);
    auto prim = model::dereformulate(st2, fft);
    double dev = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        dev = std::max(dev, std::abs(prim.rho.v[i] - rho.v[i]));
        dev = std::max(dev, std::abs(prim.n.v[i] - n.v[i]));
        dev = std::max(dev, std::abs(prim.u[0].v[i] - u[0].v[i]));
    }
    CHECK(dev <= 1e-12);

    for (auto& x : rho.v) x = -0.5;
    CHECK_THROWS_AS(model::reformulate(rho, u, n, w, fft), DomainError);
}

TEST_CASE("pointwise nonlinearity coefficients") {
    ModelParams p;  // isothermal: P' = 1
    CHECK(model::g_of(0.0, p) == 0.0);
    CHECK(model::f_of(0.0) == 0.0);
    CHECK(model::h_of(0.0, 0.0) == 0.0);
    // isothermal g(a) = a/(1+a); at a = 1 this is 1/2
    CHECK(model::g_of(1.0, p) == doctest::Approx(0.5).epsilon(1e-15));
    // h(0, b) = 1 - e^b
    CHECK(model::h_of(0.0, 0.3) == doctest::Approx(1.0 - std::exp(0.3)).epsilon(1e-15));
}

TEST_CASE("G vanishes at equilibrium and reduces to (1-e^b)(u-w) at a=0") {
    Grid g(2, 32, 2.0 * M_PI);
    Dynamics dyn(g, ModelParams{});
    FlowState eq(g);
    auto G0 = dyn.nonlinear_G(eq);
    CHECK(l2_norm(G0) == 0.0);

    // constant b, constant u - w: G = (1 - e^b)(u - w) pointwise
    FlowState st(g);
    const double bval = 0.3, u0 = 0.7, u1 = -0.4;
    st.b.c[0] = cplx(bval, 0.0);
    st.u[0].c[0] = cplx(u0, 0.0);
    st.u[1].c[0] = cplx(u1, 0.0);
    auto G = dyn.nonlinear_G(st);
    Transformer fft(g);
    RealField g0 = fft.to_physical(G[0]);
    RealField g1 = fft.to_physical(G[1]);
    const double expect0 = (1.0 - std::exp(bval)) * u0;
    const double expect1 = (1.0 - std::exp(bval)) * u1;
    CHECK(g0.v[5] == doctest::Approx(expect0).epsilon(1e-13));
    CHECK(g1.v[5] == doctest::Approx(expect1).epsilon(1e-13));

    // G vanishes when a = b = 0 and u = w
    FlowState sym = linear::random_state(g, 99, 1e-2);
    sym.a.set_zero();
    sym.b.set_zero();
    for (int i = 0; i < g.d; ++i) sym.w[i] = sym.u[i];
    auto Gsym = dyn.nonlinear_G(sym);
    CHECK(l2_norm(Gsym) <= 1e-15);
}

TEST_CASE("equilibrium is an exact fixed point") {
    Grid g(2, 32, 2.0 * M_PI);
    Dynamics dyn(g, ModelParams{});
    FlowState eq(g);
    auto t = dyn.rhs(eq);
    CHECK(l2_norm(t.da) == 0.0);
    CHECK(l2_norm(t.db) == 0.0);
    CHECK(l2_norm(t.du) == 0.0);
    CHECK(l2_norm(t.dw) == 0.0);
}

TEST_CASE("linear rhs matches the full symbol per mode") {
    Grid g(2, 16, 4.0 * M_PI);
    ModelParams params;
    Dynamics dyn(g, params);
    FlowState st = linear::random_state(g, 4, 1.0);
    auto lin = dyn.rhs_linear(st);
    double worst = 0.0;
    for (std::size_t s = 0; s < st.a.size(); ++s) {
        auto m = g.mode(s);
        std::vector<double> k(g.d);
        for (int i = 0; i < g.d; ++i) k[i] = g.k_fund() * m[i];
        Eigen::MatrixXcd M = linear::full_symbol(k, params);
        Eigen::VectorXcd y(2 * g.d + 2);
        y(0) = st.a.c[s];
        for (int i = 0; i < g.d; ++i) y(1 + i) = st.u[i].c[s];
        y(g.d + 1) = st.b.c[s];
        for (int i = 0; i < g.d; ++i) y(g.d + 2 + i) = st.w[i].c[s];
        Eigen::VectorXcd dy = M * y;
        worst = std::max(worst, std::abs(dy(0) - lin.da.c[s]));
        worst = std::max(worst, std::abs(dy(g.d + 1) - lin.db.c[s]));
        for (int i = 0; i < g.d; ++i) {
            worst = std::max(worst, std::abs(dy(1 + i) - lin.du[i].c[s]));
            worst = std::max(worst, std::abs(dy(g.d + 2 + i) - lin.dw[i].c[s]));
        }
    }
    CHECK(worst <= 1e-12 * max_field_amp(st) * 100.0);
}

TEST_CASE("single-mode density perturbation drives only the momentum equation") {
    Grid g(2, 32, 2.0 * M_PI);
    Dynamics dyn(g, ModelParams{});
    FlowState st(g);
    const double amp = 1e-3;
    // a = amp cos(x0)
    const int nh = g.N / 2 + 1;
    st.a.c[static_cast<std::size_t>(1) * nh] = cplx(0.5 * amp, 0.0);
    st.a.c[static_cast<std::size_t>(g.N - 1) * nh] = cplx(0.5 * amp, 0.0);

    auto t = dyn.rhs(st);
    CHECK(l2_norm(t.da) == 0.0);  // -div(a u) with u = 0
    CHECK(l2_norm(t.db) == 0.0);
    CHECK(l2_norm(t.dw) == 0.0);  // drag -(w - u) vanishes

    // du = -(1 - g(a)) da/dx pointwise, up to truncated high harmonics
    Transformer fft(g);
    RealField du0 = fft.to_physical(t.du[0]);
    RealField a_p = fft.to_physical(st.a);
    std::vector<SpectralField> ga = gradient(st.a);
    RealField dax = fft.to_physical(ga[0]);
    double worst = 0.0;
    for (std::size_t i = 0; i < du0.size(); ++i) {
        double hand = -(1.0 - model::g_of(a_p.v[i], dyn.params())) * dax.v[i];
        worst = std::max(worst, std::abs(du0.v[i] - hand));
    }
    CHECK(worst <= 1e-12 * amp);
}

TEST_CASE("relative-velocity identity holds to rounding") {
    for (int d : {2, 3}) {
        Grid g(d, d == 2 ? 32 : 16, 2.0 * M_PI);
        Dynamics dyn(g, ModelParams{});

        FlowState eq(g);
        CHECK(dyn.relative_velocity_residual(eq) == 0.0);

        Rng rng(31);
        for (int trial = 0; trial < 4; ++trial) {
            FlowState st = linear::random_state(g, 100 + trial, 5e-3);
            double mag = max_field_amp(st);
            CHECK(dyn.relative_velocity_residual(st) <= 1e-12 * mag * g.real_size());

            for (int i = 0; i < d; ++i) st.w[i] = st.u[i];  // zero relative velocity
            CHECK(dyn.relative_velocity_residual(st) <= 1e-12 * mag * g.real_size());
        }
    }
}

TEST_CASE("mass structure: mean tendencies vanish") {
    Grid g(2, 64, 2.0 * M_PI);
    Dynamics dyn(g, ModelParams{});
    FlowState st = linear::random_state(g, 77, 1e-2);
    // keep only smooth low modes so quadrature is spectrally exact
    for (SpectralField* f : st.all_spectral())
        for (std::size_t s = 0; s < f->size(); ++s)
            if (g.mode_norm2(s) > 36) f->c[s] = cplx(0, 0);

    auto t = dyn.rhs(st);
    CHECK(std::abs(mean_value(t.da)) <= 1e-16);

    // d/dt int n = int e^b db dx must vanish (periodic divergence form)
    Transformer fft(g);
    RealField b_p = fft.to_physical(st.b);
    RealField db_p = fft.to_physical(t.db);
    double acc = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < b_p.size(); ++i) {
        acc += std::exp(b_p.v[i]) * db_p.v[i];
        scale += std::abs(db_p.v[i]);
    }
    CHECK(std::abs(acc) <= 1e-12 * std::max(scale, 1.0));
}

TEST_CASE("drag contribution flips sign under u <-> w swap") {
    Grid g(2, 32, 2.0 * M_PI);
    ModelParams p1, p2;
    p2.kappa = 2.0;
    Dynamics dyn1(g, p1), dyn2(g, p2);
    FlowState st = linear::random_state(g, 55, 1e-2);
    FlowState sw = st;
    for (int i = 0; i < g.d; ++i) std::swap(sw.u[i], sw.w[i]);

    // kappa-linear part isolates the drag terms exactly
    auto t1 = dyn1.rhs(st), t2 = dyn2.rhs(st);
    auto s1 = dyn1.rhs(sw), s2 = dyn2.rhs(sw);
    double worst = 0.0, scale = 0.0;
    for (int i = 0; i < g.d; ++i)
        for (std::size_t s = 0; s < st.a.size(); ++s) {
            cplx drag_u = t2.du[i].c[s] - t1.du[i].c[s];
            cplx drag_u_sw = s2.du[i].c[s] - s1.du[i].c[s];
            cplx drag_w = t2.dw[i].c[s] - t1.dw[i].c[s];
            cplx drag_w_sw = s2.dw[i].c[s] - s1.dw[i].c[s];
            worst = std::max(worst, std::abs(drag_u + drag_u_sw));
            worst = std::max(worst, std::abs(drag_w + drag_w_sw));
            scale = std::max(scale, std::abs(drag_u));
        }
    CHECK(worst <= 1e-12 * std::max(scale, 1e-30));
}

TEST_CASE("vacuum guard names the worst grid point") {
    Grid g(2, 16, 2.0 * M_PI);
    Dynamics dyn(g, ModelParams{});
    FlowState st(g);
    st.a.c[0] = cplx(-1.0 + 1e-9, 0.0);  // constant a, 1 + a below threshold
    try {
        dyn.rhs(st);
        FAIL("expected vacuum error");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("grid point") != std::string::npos);
    }
}
