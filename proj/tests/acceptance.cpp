// Acceptance suite: one binary, one pass/fail line per criterion, all
// tolerances pinned in code. Run everything or a single criterion with
// --criterion <k>.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <vector>

#include "nserlx/core/rng.hpp"
#include "nserlx/experiments/decay.hpp"
#include "nserlx/experiments/functionals.hpp"
#include "nserlx/experiments/initial_data.hpp"
#include "nserlx/linear/decay_curve.hpp"
#include "nserlx/linear/energy.hpp"
#include "nserlx/linear/propagator.hpp"
#include "nserlx/linear/verify.hpp"
#include "nserlx/solver/run.hpp"

using namespace nserlx;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Criterion = Outcome (*)();

// 1. Partition of unity over 1e5 sampled nonzero radii.
Outcome criterion_partition() {
    Rng rng(101);
    double worst = 0.0;
    const int j_lo = -24, j_hi = 24;
    for (int i = 0; i < 100000; ++i) {
        double r = std::pow(10.0, -6.0 + 12.0 * rng.uniform());
        worst = std::max(worst, std::abs(lp::partition_sum(r, j_lo, j_hi) - 1.0));
    }
    // and on actual grid banks
    for (int d : {2, 3}) {
        Grid g(d, d == 2 ? 64 : 32, 16.0 * M_PI);
        worst = std::max(worst, lp::build_filter_bank(g).partition_defect());
    }
    Outcome out;
    out.pass = worst <= 1e-10;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max |sum phi - 1| = %.3e (tol 1e-10)", worst);
    out.detail = buf;
    return out;
}

// 2. Key inequality (10^4 random block vectors, u = w/2 equality case).
Outcome criterion_key_inequality() {
    auto row = linear::check_key_inequality(10000, 202);
    Outcome out;
    out.pass = row.pass;
    out.detail = row.note + " (tol 1e-12)";
    return out;
}

// 3. Velocity-dissipation inequality, both branches, j in {-4..4}.
Outcome criterion_velocity_dissipation() {
    auto row = linear::check_velocity_dissipation(10000, -4, 4, 303);
    Outcome out;
    out.pass = row.pass;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "worst margin %.3e (tol -1e-12)", row.measured);
    out.detail = buf;
    return out;
}

// 4. Energy equivalences as exact two-sided bounds.
Outcome criterion_equivalences() {
    Grid glow(2, 64, 64.0 * M_PI);
    auto bank_low = lp::build_filter_bank(glow);
    auto r1 = linear::check_equivalence_E1(glow, bank_low, -4, 0, 1000, 0.1, 404);
    Grid ghigh(2, 64, 2.0 * M_PI);
    auto bank_high = lp::build_filter_bank(ghigh);
    auto r3 = linear::check_equivalence_E3(ghigh, bank_high, -1, 4, 1000, 0.05, 405);
    Outcome out;
    out.pass = r1.pass && r3.pass;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "E1 margin %.3e, E3 margin %.3e (tol -1e-12)", r1.measured,
                  r3.measured);
    out.detail = buf;
    return out;
}

// 5. Dissipativity on 512 log-spaced frequencies and spectra at zero.
Outcome criterion_dissipativity() {
    model::ModelParams params;
    auto scan = linear::check_dissipativity(params, 1e-3, 1e3, 512);
    auto zero = linear::check_spectrum_at_zero(params);
    auto red2 = linear::check_full_vs_reduced(params, 2, 128, 506);
    auto red3 = linear::check_full_vs_reduced(params, 3, 128, 507);
    Outcome out;
    out.pass = scan.pass && zero.pass && red2.pass && red3.pass;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max Re lambda = %.3e, xi=0 spectra dev %.3e (tol 1e-12)",
                  scan.measured, zero.measured);
    out.detail = buf;
    return out;
}

// 6. Lyapunov decay of the frequency-localized functionals along exact
// semigroup trajectories.
Outcome criterion_lyapunov() {
    model::ModelParams params;
    linear::EnergyParams etas;  // eta = 0.05 defaults
    double worst_balance = 0.0, worst_gronwall = -1e300, min_d = 1e300;
    double min_block_energy = 1e300;  // every checked block must carry content

    Grid glow(2, 48, 64.0 * M_PI);
    auto bank_low = lp::build_filter_bank(glow);
    for (int trial = 0; trial < 3; ++trial) {
        model::FlowState st = linear::random_state(glow, 600 + trial, 1.0, true);
        const double dt = 1e-3;
        std::vector<model::FlowState> traj;
        for (int i = 0; i < 5; ++i) traj.push_back(linear::linear_propagate(st, i * dt, params));
        for (int j = -4; j <= 0; ++j) {
            auto rep = linear::lyapunov_residual(traj, dt, j, bank_low, etas, 1);
            worst_balance = std::max(worst_balance, rep.max_balance_residual);
            worst_gronwall = std::max(worst_gronwall, rep.max_gronwall_residual);
            min_d = std::min(min_d, rep.min_dissipation);
            min_block_energy =
                std::min(min_block_energy, linear::energy_E1_D1(st, j, bank_low, etas.eta1).e);
        }
    }

    Grid ghigh(2, 48, 2.0 * M_PI);
    auto bank_high = lp::build_filter_bank(ghigh);
    double worst_balance_h = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        model::FlowState st = linear::random_state(ghigh, 700 + trial, 1.0, true);
        for (int j = -1; j <= 4; ++j) {
            const double rate = 2.0 * std::pow(8.0 / 3.0 * std::pow(2.0, j), 2) + 2.0;
            const double dt = std::min(1e-3, 0.05 / std::pow(rate, 1.25));
            std::vector<model::FlowState> traj;
            for (int i = 0; i < 5; ++i)
                traj.push_back(linear::linear_propagate(st, i * dt, params));
            for (int which : {2, 3}) {
                auto rep = linear::lyapunov_residual(traj, dt, j, bank_high, etas, which);
                worst_balance_h = std::max(worst_balance_h, rep.max_balance_residual / rate);
                worst_gronwall = std::max(worst_gronwall, rep.max_gronwall_residual);
                min_d = std::min(min_d, rep.min_dissipation);
            }
            min_block_energy =
                std::min(min_block_energy, linear::energy_E1_D1(st, j, bank_high, etas.eta1).e);
        }
    }
    Outcome out;
    out.pass = worst_balance <= 1e-6 && worst_balance_h <= 1e-6 && worst_gronwall <= 1e-6 &&
               min_d > 0.0 && min_block_energy > 0.0;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "balance %.2e (low) %.2e (high, rate-scaled), gronwall %.2e, min D %.2e",
                  worst_balance, worst_balance_h, worst_gronwall, min_d);
    out.detail = buf;
    return out;
}

// 7. Heat-rate match for the composite norm, d = 2, sigma0 = -1.
Outcome criterion_heat_rate() {
    linear::ContinuumSetup setup;
    setup.d = 2;
    setup.sigma0 = -1.0;
    linear::ContinuumDecay decay(setup);
    auto times = experiments::log_spaced_times(5.0, 2000.0, 33);

    Outcome out;
    out.pass = true;
    std::string detail;
    for (double sigma : {-0.5, 0.0}) {
        lp::BesovSpec spec{sigma, lp::SumExp::One, lp::Band::Low};
        const double theory = -0.5 * (sigma - setup.sigma0);
        auto fit = experiments::fit_power_law(
            times, decay.curve(linear::DecayQuantity::Composite, spec, times), 10.0, 1000.0);
        auto hfit = experiments::fit_power_law(
            times, decay.curve(linear::DecayQuantity::Heat, spec, times), 10.0, 1000.0);
        bool ok = std::abs(fit.exponent - theory) <= 0.03 &&
                  std::abs(hfit.exponent - theory) <= 0.03;
        out.pass = out.pass && ok;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "[s=%g: theory %.3f fit %.4f heat %.4f] ", sigma, theory,
                      fit.exponent, hfit.exponent);
        detail += buf;
    }
    out.detail = detail + "(tol 0.03)";
    return out;
}

// 8. Relative-velocity enhancement, d = 3, sigma0 = -3/2.
Outcome criterion_relative_velocity_rates() {
    linear::ContinuumSetup setup;
    setup.d = 3;
    setup.sigma0 = -1.5;
    linear::ContinuumDecay decay(setup);
    auto times = experiments::log_spaced_times(5.0, 2000.0, 33);

    lp::BesovSpec l1{-1.0, lp::SumExp::One, lp::Band::Low};
    auto fit1 = experiments::fit_power_law(
        times, decay.curve(linear::DecayQuantity::RelVelocity, l1, times), 10.0, 1000.0);
    const double theory1 = -0.5 * (1.0 + (-1.0) - (-1.5));  // -0.75

    lp::BesovSpec linf{-1.5, lp::SumExp::Inf, lp::Band::Low};
    auto fit2 = experiments::fit_power_law(
        times, decay.curve(linear::DecayQuantity::RelVelocity, linf, times), 10.0, 1000.0);
    const double theory2 = -0.5;  // sigma* = min(1/2, (d/2-1-sigma0)/2) = 1/2

    Outcome out;
    out.pass = std::abs(fit1.exponent - theory1) <= 0.05 &&
               std::abs(fit2.exponent - theory2) <= 0.05;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "B^{-1}_{2,1}: theory %.2f fit %.4f; B^{s0}_{2,inf}: theory %.2f fit %.4f "
                  "(tol 0.05)",
                  theory1, fit1.exponent, theory2, fit2.exponent);
    out.detail = buf;
    return out;
}

// 9. Relative-velocity identity on 100 random vacuum-free states.
Outcome criterion_relative_velocity_identity() {
    double worst = 0.0;
    for (int d : {2, 3}) {
        Grid g(d, d == 2 ? 32 : 16, 2.0 * M_PI);
        model::Dynamics dyn(g, model::ModelParams{});
        for (int trial = 0; trial < 50; ++trial) {
            model::FlowState st = linear::random_state(g, 900 + trial, 1e-2);
            double mag = 0.0;
            for (const SpectralField* f : st.all_spectral())
                for (const auto& z : f->c) mag = std::max(mag, std::abs(z));
            double res = dyn.relative_velocity_residual(st);
            worst = std::max(worst, res / (mag * g.real_size()));
        }
    }
    Outcome out;
    out.pass = worst <= 1e-12;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "worst relative residual %.3e (tol 1e-12)", worst);
    out.detail = buf;
    return out;
}

// 10. Nonlinear small-data boundedness at desk scale.
Outcome criterion_nonlinear_boundedness() {
    Grid g(2, 128, 16.0 * M_PI);
    solver::SimConfig cfg;
    cfg.grid = g;
    cfg.dt = 0.025;
    cfg.T = 50.0;
    cfg.cadence = 20;
    cfg.sigma0 = -1.0;
    cfg.scheme = solver::Scheme::IfRk2;

    experiments::InitialDataSpec spec;
    spec.sigma0 = -1.0;
    spec.epsilon = 1e-3;
    spec.seed = 12;
    model::FlowState initial = experiments::make_perturbation(spec, g);
    auto res = solver::run(cfg, initial);

    double min_density = 1e300;
    for (const auto& row : res.rows) min_density = std::min(min_density, row.min_density);
    double mean_drift = std::abs(res.rows.back().mean_a - res.rows.front().mean_a);

    auto fs = experiments::composite_functionals(res, 2, -1.0);
    double x0 = fs.x.front(), xmax = 0.0;
    for (double x : fs.x) xmax = std::max(xmax, x);

    // self-convergence on a short horizon with halved steps
    auto advance = [&](double dt, double T) {
        solver::Stepper stepper(g, cfg.params, cfg.scheme, dt);
        model::FlowState x = initial;
        int n = static_cast<int>(std::llround(T / dt));
        for (int i = 0; i < n; ++i) stepper.step(x);
        return x;
    };
    auto dist = [](const model::FlowState& a, const model::FlowState& b) {
        double acc = 0.0;
        auto va = a.all_spectral();
        auto vb = b.all_spectral();
        for (std::size_t i = 0; i < va.size(); ++i)
            for (std::size_t s = 0; s < va[i]->size(); ++s)
                acc = std::max(acc, std::abs(va[i]->c[s] - vb[i]->c[s]));
        return acc;
    };
    model::FlowState c1 = advance(0.1, 2.0), c2 = advance(0.05, 2.0), c3 = advance(0.025, 2.0);
    double ratio = dist(c1, c2) / dist(c2, c3);  // ~4 for second order

    Outcome out;
    out.pass = min_density >= 0.5 && xmax <= 3.0 * x0 && mean_drift <= 1e-12 && ratio >= 3.2 &&
               ratio <= 4.8;
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "min(1+a) %.4f, X max/X0 %.3f (<=3), mean drift %.1e, RK2 ratio %.2f", min_density,
                  xmax / x0, mean_drift, ratio);
    out.detail = buf;
    return out;
}

// 11. One solver step against the exact semigroup at amplitude 1e-6.
Outcome criterion_linear_agreement() {
    Grid g(2, 64, 16.0 * M_PI);
    model::ModelParams params;
    model::FlowState state = linear::random_state(g, 1111, 1e-6);
    const double dt = 1e-3;
    model::FlowState expect = linear::linear_propagate(state, dt, params);
    solver::Stepper stepper(g, params, solver::Scheme::IfRk2, dt);
    model::FlowState x = state;
    stepper.step(x);

    double err = 0.0, scale = 0.0;
    auto va = x.all_spectral();
    auto vb = expect.all_spectral();
    auto vs = state.all_spectral();
    for (std::size_t i = 0; i < va.size(); ++i) {
        SpectralField diff(g);
        for (std::size_t s = 0; s < diff.size(); ++s) diff.c[s] = va[i]->c[s] - vb[i]->c[s];
        err += std::pow(l2_norm(diff), 2);
        scale += std::pow(l2_norm(*vs[i]), 2);
    }
    double rel = std::sqrt(err / scale);
    Outcome out;
    out.pass = rel <= 1e-8;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "relative step error %.3e (tol 1e-8)", rel);
    out.detail = buf;
    return out;
}

struct Entry {
    int id;
    const char* name;
    Criterion fn;
};

const Entry kCriteria[] = {
    {1, "partition of unity", criterion_partition},
    {2, "key inequality", criterion_key_inequality},
    {3, "velocity-dissipation inequality", criterion_velocity_dissipation},
    {4, "energy equivalences", criterion_equivalences},
    {5, "linear dissipativity", criterion_dissipativity},
    {6, "linear Lyapunov decay", criterion_lyapunov},
    {7, "heat-rate match", criterion_heat_rate},
    {8, "relative-velocity enhancement", criterion_relative_velocity_rates},
    {9, "relative-velocity identity", criterion_relative_velocity_identity},
    {10, "nonlinear small-data boundedness", criterion_nonlinear_boundedness},
    {11, "linear-regime solver agreement", criterion_linear_agreement},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
    }
    bool all_pass = true;
    for (const auto& entry : kCriteria) {
        if (only != 0 && entry.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = entry.fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d. %-36s %s  (%.1f s)\n", out.pass ? "PASS" : "FAIL", entry.id,
                    entry.name, out.detail.c_str(), secs);
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
