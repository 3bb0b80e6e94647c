#include "nserlx/solver/run.hpp"

#include <cmath>
#include <set>

#include "nserlx/linear/energy.hpp"

namespace nserlx::solver {

namespace {
std::vector<double> relvel_block_norms(const model::FlowState& st,
                                       const lp::DyadicFilterBank& bank) {
    std::vector<SpectralField> diff;
    for (int i = 0; i < st.grid.d; ++i) {
        SpectralField d(st.grid);
        for (std::size_t s = 0; s < d.size(); ++s) d.c[s] = st.u[i].c[s] - st.w[i].c[s];
        diff.push_back(std::move(d));
    }
    return lp::block_l2_norms(diff, bank);
}

double norm_for_request(const NormRequest& req, const model::FlowState& st,
                        const lp::DyadicFilterBank& bank) {
    if (req.field == "a") return lp::besov_norm(st.a, req.spec, bank, true);
    if (req.field == "b") return lp::besov_norm(st.b, req.spec, bank, true);
    if (req.field == "u") return lp::besov_norm(st.u, req.spec, bank, true);
    if (req.field == "w") return lp::besov_norm(st.w, req.spec, bank, true);
    if (req.field == "relvel") {
        std::vector<SpectralField> diff;
        for (int i = 0; i < st.grid.d; ++i) {
            SpectralField d(st.grid);
            for (std::size_t s = 0; s < d.size(); ++s) d.c[s] = st.u[i].c[s] - st.w[i].c[s];
            diff.push_back(std::move(d));
        }
        return lp::besov_norm(diff, req.spec, bank, true);
    }
    if (req.field == "composite")
        return lp::besov_norm(st.a, req.spec, bank, true) +
               lp::besov_norm(st.u, req.spec, bank, true) +
               lp::besov_norm(st.b, req.spec, bank, true) +
               lp::besov_norm(st.w, req.spec, bank, true);
    throw ConfigError("unknown norm field '" + req.field + "'");
}
}  // namespace

RunResult run(const SimConfig& config, const model::FlowState& initial, const RunSinks& sinks) {
    config.validate();
    model::FlowState state = initial;
    for (SpectralField* f : state.all_spectral()) apply_dealias_mask(*f);

    Stepper stepper(config.grid, config.params, config.scheme, config.dt);
    const Transformer& fft = stepper.dynamics().fft();
    lp::DyadicFilterBank bank = lp::build_filter_bank(config.grid);

    const int nsteps = static_cast<int>(std::llround(config.T / config.dt));
    std::set<int> snapshot_steps;
    if (config.snapshots > 0) {
        for (int i = 0; i < config.snapshots; ++i) {
            double frac = config.snapshots == 1
                              ? 1.0
                              : std::pow(static_cast<double>(nsteps),
                                         static_cast<double>(i) / (config.snapshots - 1)) /
                                    nsteps;
            snapshot_steps.insert(std::max(1, static_cast<int>(std::llround(frac * nsteps))));
        }
    }

    RunResult res;
    res.j_min = bank.j_min();
    res.j_max = bank.j_max();
    res.tick_dt = config.dt * config.cadence;

    RealField scratch(config.grid);
    int snap_index = 0;
    auto emit = [&](int step_index) {
        const double t = step_index * config.dt;
        res.times.push_back(t);
        res.blocks_a.push_back(lp::block_l2_norms(state.a, bank));
        res.blocks_u.push_back(lp::block_l2_norms(state.u, bank));
        res.blocks_b.push_back(lp::block_l2_norms(state.b, bank));
        res.blocks_w.push_back(lp::block_l2_norms(state.w, bank));
        res.blocks_relvel.push_back(relvel_block_norms(state, bank));

        DiagnosticsRow row;
        row.t = t;
        row.mean_a = mean_value(state.a);
        fft.to_physical(state.a, scratch);
        double mina = scratch.v[0];
        for (double x : scratch.v) mina = std::min(mina, x);
        row.min_density = 1.0 + mina;
        fft.to_physical(state.b, scratch);
        double cell = std::pow(config.grid.dx(), config.grid.d);
        double total = 0.0;
        for (double x : scratch.v) total += std::exp(x);
        row.total_n = total * cell;
        for (const auto& req : config.diagnostics)
            row.norms[req.label] = norm_for_request(req, state, bank);
        for (int j : config.energy_j) {
            if (j < bank.j_min() || j > bank.j_max()) continue;
            linear::BlockFields f = linear::filter_state(state, j, bank);
            linear::EnergyParams etas;
            auto e1 = linear::energy_E1_D1(f, etas.eta1);
            auto e2 = linear::energy_E2_D2(f, j, etas.eta2);
            auto e3 = linear::energy_E3_D3(f, j, etas.eta3);
            std::string suffix = "_j" + std::to_string(j);
            row.energies["E1" + suffix] = e1.e;
            row.energies["D1" + suffix] = e1.d;
            row.energies["E2" + suffix] = e2.e;
            row.energies["D2" + suffix] = e2.d;
            row.energies["E3" + suffix] = e3.e;
            row.energies["D3" + suffix] = e3.d;
        }
        res.rows.push_back(row);
        if (sinks.on_row) sinks.on_row(row);
    };

    emit(0);
    for (int step = 1; step <= nsteps; ++step) {
        stepper.step(state);
        if (step % config.cadence == 0) emit(step);
        if (snapshot_steps.count(step) && sinks.on_snapshot) {
            model::FlowState snap = state;
            snap.sync_physical(fft);
            sinks.on_snapshot(snap, step * config.dt, snap_index++);
        }
    }
    state.sync_physical(fft);
    res.final_state = std::move(state);
    return res;
}

}  // namespace nserlx::solver
