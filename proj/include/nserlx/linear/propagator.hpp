#pragma once

#include <Eigen/Dense>
#include <unordered_map>

#include "nserlx/linear/symbol.hpp"
#include "nserlx/model/state.hpp"

namespace nserlx::linear {

/// exp(t * A) for both symbol blocks at one frequency. Computed by
/// eigendecomposition, falling back to scaled squaring when the
/// eigenvector basis is ill-conditioned (condition number > 1e8).
struct BlockExp {
    Eigen::Matrix4d compressible;
    Eigen::Matrix2d solenoidal;
};

BlockExp block_exponential(double xi, double t, const model::ModelParams& params);

/// Eigendecomposition of the blocks at one frequency, reusable across
/// times: exp(tA) = Re(V diag(e^{lambda t}) V^{-1}).
class BlockEig {
public:
    BlockEig() = default;
    BlockEig(double xi, const model::ModelParams& params);

    BlockExp exponential(double t) const;
    /// Propagate a 6-vector (a, v, b, z, p, q) of complex amplitudes.
    void apply(double t, std::array<cplx, 6>& amp) const;
    bool used_fallback() const { return fallback_; }

private:
    double xi_ = 0.0;
    model::ModelParams params_;
    bool fallback_ = false;
    Eigen::Matrix4cd vc_, vci_;
    Eigen::Vector4cd lc_;
    Eigen::Matrix2cd vs_, vsi_;
    Eigen::Vector2cd ls_;
};

/// Cache of per-mode block exponentials for a fixed grid and time step,
/// keyed by the integer |m|^2 of the mode.
class PropagatorTable {
public:
    PropagatorTable(const Grid& grid, double dt, const model::ModelParams& params);

    double dt() const { return dt_; }
    const BlockExp& at(int64_t mode_norm2) const;

    /// Apply exp(dt L) mode-by-mode to the spectral state, in place.
    void apply(model::FlowState& state) const;
    void apply(SpectralField& a, std::vector<SpectralField>& u, SpectralField& b,
               std::vector<SpectralField>& w) const;

private:
    Grid grid_;
    double dt_;
    model::ModelParams params_;
    std::unordered_map<int64_t, BlockExp> table_;
};

/// Exact linear semigroup applied to a grid state: state <- exp(tL) state.
model::FlowState linear_propagate(const model::FlowState& state, double t,
                                  const model::ModelParams& params);

/// Radial amplitude profile (a, v, b, z, p, q) on strictly increasing
/// positive frequencies.
struct RadialProfile {
    std::vector<double> r;
    std::vector<std::array<double, 6>> amp;
};

/// Per-frequency semigroup propagation of a radial profile.
RadialProfile semigroup_propagate(const RadialProfile& profile, double t,
                                  const model::ModelParams& params);

}  // namespace nserlx::linear
