#pragma once

#include <vector>

#include "nserlx/core/fft.hpp"
#include "nserlx/core/spectral_ops.hpp"

namespace nserlx::model {

/// Perturbation fields (a, u, b, w) with dual physical/spectral storage.
/// The spectral side is authoritative; sync_physical refreshes the
/// samples after spectral edits and sync_spectral the other way.
struct FlowState {
    Grid grid;
    SpectralField a, b;
    std::vector<SpectralField> u, w;
    RealField a_phys, b_phys;
    std::vector<RealField> u_phys, w_phys;

    FlowState() = default;
    explicit FlowState(const Grid& g)
        : grid(g),
          a(g),
          b(g),
          u(g.d, SpectralField(g)),
          w(g.d, SpectralField(g)),
          a_phys(g),
          b_phys(g),
          u_phys(g.d, RealField(g)),
          w_phys(g.d, RealField(g)) {}

    void sync_physical(const Transformer& fft) {
        fft.to_physical(a, a_phys);
        fft.to_physical(b, b_phys);
        for (int i = 0; i < grid.d; ++i) {
            fft.to_physical(u[i], u_phys[i]);
            fft.to_physical(w[i], w_phys[i]);
        }
    }
    void sync_spectral(const Transformer& fft) {
        fft.to_spectral(a_phys, a);
        fft.to_spectral(b_phys, b);
        for (int i = 0; i < grid.d; ++i) {
            fft.to_spectral(u_phys[i], u[i]);
            fft.to_spectral(w_phys[i], w[i]);
        }
    }

    std::vector<const SpectralField*> all_spectral() const {
        std::vector<const SpectralField*> out{&a, &b};
        for (const auto& f : u) out.push_back(&f);
        for (const auto& f : w) out.push_back(&f);
        return out;
    }
    std::vector<SpectralField*> all_spectral() {
        std::vector<SpectralField*> out{&a, &b};
        for (auto& f : u) out.push_back(&f);
        for (auto& f : w) out.push_back(&f);
        return out;
    }
};

/// Time derivatives of the four fields (spectral layout only).
struct Tendencies {
    Grid grid;
    SpectralField da, db;
    std::vector<SpectralField> du, dw;

    Tendencies() = default;
    explicit Tendencies(const Grid& g)
        : grid(g), da(g), db(g), du(g.d, SpectralField(g)), dw(g.d, SpectralField(g)) {}
};

}  // namespace nserlx::model
