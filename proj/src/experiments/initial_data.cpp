#include "nserlx/experiments/initial_data.hpp"

#include <cmath>

#include "nserlx/core/rng.hpp"
#include "nserlx/lp/filter_bank.hpp"

namespace nserlx::experiments {

double composite_x0(const model::FlowState& state, const lp::DyadicFilterBank& bank) {
    using lp::Band;
    using lp::BesovSpec;
    using lp::SumExp;
    const double half_d = 0.5 * state.grid.d;
    BesovSpec low{half_d - 1.0, SumExp::One, Band::Low};
    BesovSpec high_a{half_d, SumExp::One, Band::High};
    BesovSpec high_u{half_d - 1.0, SumExp::One, Band::High};
    BesovSpec high_bw{half_d + 1.0, SumExp::One, Band::High};
    double x0 = 0.0;
    x0 += lp::besov_norm(state.a, low, bank, true) + lp::besov_norm(state.u, low, bank, true) +
          lp::besov_norm(state.b, low, bank, true) + lp::besov_norm(state.w, low, bank, true);
    x0 += lp::besov_norm(state.a, high_a, bank, true);
    x0 += lp::besov_norm(state.u, high_u, bank, true);
    x0 += lp::besov_norm(state.b, high_bw, bank, true) +
          lp::besov_norm(state.w, high_bw, bank, true);
    return x0;
}

namespace {
void fill_component(SpectralField& f, const Grid& grid, const InitialDataSpec& spec, Rng& rng) {
    const double expo = -spec.sigma0 - 0.5 * grid.d;
    for (std::size_t s = 1; s < f.size(); ++s) {
        double r = grid.k_abs(s);
        double env = std::pow(r, expo) * lp::chi(r / (2.0 * spec.cutoff));
        if (env == 0.0) continue;
        auto [re, im] = rng.unit_phase();
        f.c[s] = env * cplx(re, im);
    }
    impose_hermitian(f);
    subtract_mean(f);
}
}  // namespace

model::FlowState make_perturbation(const InitialDataSpec& spec, const Grid& grid) {
    spec.validate(grid.d);
    model::FlowState st(grid);
    if (spec.epsilon == 0.0) return st;  // equilibrium

    // deterministic per-field sub-seeds
    uint64_t tag = 0;
    auto next_rng = [&]() { return Rng(spec.seed * 0x9e3779b97f4a7c15ULL + (++tag)); };
    for (char c : spec.components) {
        Rng rng = next_rng();
        switch (c) {
            case 'a': fill_component(st.a, grid, spec, rng); break;
            case 'b': fill_component(st.b, grid, spec, rng); break;
            case 'u':
                for (int i = 0; i < grid.d; ++i) fill_component(st.u[i], grid, spec, rng);
                break;
            case 'w':
                for (int i = 0; i < grid.d; ++i) fill_component(st.w[i], grid, spec, rng);
                break;
        }
    }

    lp::DyadicFilterBank bank = lp::build_filter_bank(grid);
    double x0 = composite_x0(st, bank);
    if (!(x0 > 0.0)) throw DomainError("initial data: degenerate synthesis (X0 = 0)");
    const double scale = spec.epsilon / x0;
    for (SpectralField* f : st.all_spectral())
        for (auto& z : f->c) z *= scale;

    Transformer fft(grid);
    st.sync_physical(fft);
    double mina = st.a_phys.v[0];
    for (double x : st.a_phys.v) mina = std::min(mina, x);
    if (1.0 + mina < 0.5)
        throw DomainError(
            "initial data: amplitude too large, min(1+a) < 1/2 violates the small-perturbation "
            "regime");
    return st;
}

}  // namespace nserlx::experiments
