#include "nserlx/linear/propagator.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "nserlx/core/parallel.hpp"

namespace nserlx::linear {

namespace {
constexpr double kCondLimit = 1e8;

template <typename M>
double condition_number(const M& v) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(v);
    const auto& sv = svd.singularValues();
    double lo = sv(sv.size() - 1);
    if (lo <= 0.0) return 1e300;
    return sv(0) / lo;
}
}  // namespace

BlockEig::BlockEig(double xi, const model::ModelParams& params) : xi_(xi), params_(params) {
    SymbolBlocks blocks = symbol_blocks(xi, params);
    Eigen::EigenSolver<Eigen::Matrix4d> es4(blocks.compressible, true);
    Eigen::EigenSolver<Eigen::Matrix2d> es2(blocks.solenoidal, true);
    vc_ = es4.eigenvectors();
    lc_ = es4.eigenvalues();
    vs_ = es2.eigenvectors();
    ls_ = es2.eigenvalues();
    if (condition_number(vc_) > kCondLimit || condition_number(vs_) > kCondLimit) {
        fallback_ = true;
        return;
    }
    vci_ = vc_.inverse();
    vsi_ = vs_.inverse();
}

BlockExp BlockEig::exponential(double t) const {
    BlockExp out;
    if (fallback_) {
        SymbolBlocks blocks = symbol_blocks(xi_, params_);
        out.compressible = (t * blocks.compressible).exp();
        out.solenoidal = (t * blocks.solenoidal).exp();
        return out;
    }
    Eigen::Vector4cd ec = (lc_.array() * t).exp();
    Eigen::Vector2cd es = (ls_.array() * t).exp();
    out.compressible = (vc_ * ec.asDiagonal() * vci_).real();
    out.solenoidal = (vs_ * es.asDiagonal() * vsi_).real();
    return out;
}

void BlockEig::apply(double t, std::array<cplx, 6>& amp) const {
    BlockExp e = exponential(t);
    std::array<cplx, 4> c{amp[0], amp[1], amp[2], amp[3]};
    std::array<cplx, 2> s{amp[4], amp[5]};
    for (int i = 0; i < 4; ++i) {
        cplx acc(0, 0);
        for (int q = 0; q < 4; ++q) acc += e.compressible(i, q) * c[q];
        amp[i] = acc;
    }
    for (int i = 0; i < 2; ++i) {
        cplx acc(0, 0);
        for (int q = 0; q < 2; ++q) acc += e.solenoidal(i, q) * s[q];
        amp[4 + i] = acc;
    }
}

BlockExp block_exponential(double xi, double t, const model::ModelParams& params) {
    if (t < 0.0) throw DomainError("propagator: time must be nonnegative");
    return BlockEig(xi, params).exponential(t);
}

PropagatorTable::PropagatorTable(const Grid& grid, double dt, const model::ModelParams& params)
    : grid_(grid), dt_(dt), params_(params) {
    if (dt < 0.0) throw DomainError("propagator: time must be nonnegative");
    const double kf = grid.k_fund();
    for (std::size_t s = 0; s < grid.spec_size(); ++s) {
        int64_t q = grid.mode_norm2(s);
        if (table_.count(q)) continue;
        double xi = kf * std::sqrt(static_cast<double>(q));
        table_.emplace(q, block_exponential(xi, dt, params));
    }
}

const BlockExp& PropagatorTable::at(int64_t q) const {
    auto it = table_.find(q);
    if (it == table_.end()) throw DomainError("propagator: uncached mode");
    return it->second;
}

void PropagatorTable::apply(SpectralField& a, std::vector<SpectralField>& u, SpectralField& b,
                            std::vector<SpectralField>& w) const {
    const Grid& g = grid_;
    const int d = g.d;
    const double kf = g.k_fund();
    // modes are independent; chunks write disjoint slots
    parallel_for(0, a.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t s = lo; s < hi; ++s) {
        const int64_t q = g.mode_norm2(s);
        const BlockExp& e = at(q);
        if (q == 0) {
            // velocity means evolve by the solenoidal block at xi = 0
            for (int i = 0; i < d; ++i) {
                cplx ui = u[i].c[s], wi = w[i].c[s];
                u[i].c[s] = e.solenoidal(0, 0) * ui + e.solenoidal(0, 1) * wi;
                w[i].c[s] = e.solenoidal(1, 0) * ui + e.solenoidal(1, 1) * wi;
            }
            continue;
        }
        auto m = g.mode(s);
        const double xi = kf * std::sqrt(static_cast<double>(q));
        double unit[3] = {0, 0, 0};
        for (int i = 0; i < d; ++i) unit[i] = kf * m[i] / xi;

        // Helmholtz split: v = i (khat . u), u_par = -i khat v
        cplx v(0, 0), z(0, 0);
        for (int i = 0; i < d; ++i) {
            v += cplx(0, 1) * unit[i] * u[i].c[s];
            z += cplx(0, 1) * unit[i] * w[i].c[s];
        }
        cplx up[3], wp[3];
        for (int i = 0; i < d; ++i) {
            up[i] = u[i].c[s] - cplx(0, -1) * unit[i] * v;
            wp[i] = w[i].c[s] - cplx(0, -1) * unit[i] * z;
        }

        cplx av = a.c[s], bv = b.c[s];
        cplx an = e.compressible(0, 0) * av + e.compressible(0, 1) * v +
                  e.compressible(0, 2) * bv + e.compressible(0, 3) * z;
        cplx vn = e.compressible(1, 0) * av + e.compressible(1, 1) * v +
                  e.compressible(1, 2) * bv + e.compressible(1, 3) * z;
        cplx bn = e.compressible(2, 0) * av + e.compressible(2, 1) * v +
                  e.compressible(2, 2) * bv + e.compressible(2, 3) * z;
        cplx zn = e.compressible(3, 0) * av + e.compressible(3, 1) * v +
                  e.compressible(3, 2) * bv + e.compressible(3, 3) * z;
        a.c[s] = an;
        b.c[s] = bn;
        for (int i = 0; i < d; ++i) {
            cplx upn = e.solenoidal(0, 0) * up[i] + e.solenoidal(0, 1) * wp[i];
            cplx wpn = e.solenoidal(1, 0) * up[i] + e.solenoidal(1, 1) * wp[i];
            u[i].c[s] = cplx(0, -1) * unit[i] * vn + upn;
            w[i].c[s] = cplx(0, -1) * unit[i] * zn + wpn;
        }
    }
    });
}

void PropagatorTable::apply(model::FlowState& state) const {
    apply(state.a, state.u, state.b, state.w);
}

model::FlowState linear_propagate(const model::FlowState& state, double t,
                                  const model::ModelParams& params) {
    if (t < 0.0) throw DomainError("propagator: time must be nonnegative");
    model::FlowState out = state;
    PropagatorTable table(state.grid, t, params);
    table.apply(out);
    return out;
}

RadialProfile semigroup_propagate(const RadialProfile& profile, double t,
                                  const model::ModelParams& params) {
    if (t < 0.0) throw DomainError("semigroup: time must be nonnegative");
    if (profile.r.size() != profile.amp.size())
        throw DomainError("semigroup: profile size mismatch");
    for (std::size_t i = 0; i < profile.r.size(); ++i) {
        if (!(profile.r[i] > 0.0) || (i > 0 && !(profile.r[i] > profile.r[i - 1])))
            throw DomainError("semigroup: radial grid must be strictly positive and increasing");
    }
    RadialProfile out = profile;
    for (std::size_t i = 0; i < out.r.size(); ++i) {
        BlockExp e = block_exponential(out.r[i], t, params);
        const auto& x = profile.amp[i];
        auto& y = out.amp[i];
        for (int row = 0; row < 4; ++row) {
            double acc = 0.0;
            for (int col = 0; col < 4; ++col) acc += e.compressible(row, col) * x[col];
            y[row] = acc;
        }
        for (int row = 0; row < 2; ++row) {
            double acc = 0.0;
            for (int col = 0; col < 2; ++col) acc += e.solenoidal(row, col) * x[4 + col];
            y[4 + row] = acc;
        }
    }
    return out;
}

}  // namespace nserlx::linear
