#include "nserlx/linear/decay_curve.hpp"

#include <cmath>

#include "nserlx/core/parallel.hpp"
#include "nserlx/lp/filter_bank.hpp"

namespace nserlx::linear {

DecayQuantity parse_quantity(const std::string& name) {
    if (name == "composite") return DecayQuantity::Composite;
    if (name == "relvel" || name == "relative-velocity") return DecayQuantity::RelVelocity;
    if (name == "a") return DecayQuantity::A;
    if (name == "u") return DecayQuantity::U;
    if (name == "b") return DecayQuantity::B;
    if (name == "w") return DecayQuantity::W;
    if (name == "heat") return DecayQuantity::Heat;
    throw ConfigError("unknown decay quantity '" + name +
                      "' (expected composite|relvel|a|u|b|w|heat)");
}

std::string quantity_name(DecayQuantity q) {
    switch (q) {
        case DecayQuantity::Composite: return "composite";
        case DecayQuantity::RelVelocity: return "relvel";
        case DecayQuantity::A: return "a";
        case DecayQuantity::U: return "u";
        case DecayQuantity::B: return "b";
        case DecayQuantity::W: return "w";
        default: return "heat";
    }
}

void ContinuumSetup::validate() const {
    if (d != 2 && d != 3) throw DomainError("continuum decay: d must be 2 or 3");
    if (!(sigma0 >= -0.5 * d && sigma0 < 0.5 * d - 1.0))
        throw DomainError("continuum decay: sigma0 must lie in [-d/2, d/2-1)");
    if (nodes_per_block < 8) throw DomainError("continuum decay: too few quadrature nodes");
    if (j_lo > j_hi) throw DomainError("continuum decay: empty block range");
    params.validate();
}

ContinuumDecay::ContinuumDecay(const ContinuumSetup& setup) : setup_(setup) {
    setup_.validate();
    sphere_ = setup_.d == 2 ? 2.0 * M_PI : 4.0 * M_PI;
    const double support_hi = 8.0 / 3.0 * setup_.cutoff;

    for (int j = setup_.j_lo; j <= setup_.j_hi; ++j) {
        const double r_lo = 0.75 * std::ldexp(1.0, j);
        const double r_hi = std::min(8.0 / 3.0 * std::ldexp(1.0, j), support_hi);
        if (!(r_hi > r_lo)) continue;
        const int n = setup_.nodes_per_block;
        const double h = std::log(r_hi / r_lo) / (n - 1);
        std::vector<Node> nodes;
        nodes.reserve(n);
        for (int i = 0; i < n; ++i) {
            Node nd;
            nd.r = r_lo * std::exp(h * i);
            double wq = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            nd.quad = wq * h * nd.r * std::pow(nd.r, setup_.d - 1);
            nd.phi = lp::phi(std::ldexp(nd.r, -j));
            nd.env = std::pow(nd.r, -setup_.sigma0 - 0.5 * setup_.d) *
                     lp::chi(nd.r / (2.0 * setup_.cutoff));
            nd.eig = std::make_shared<BlockEig>(nd.r, setup_.params);
            nodes.push_back(std::move(nd));
        }
        block_j_.push_back(j);
        blocks_.push_back(std::move(nodes));
    }
}

double ContinuumDecay::block_norm(std::size_t bi, DecayQuantity q, double t) const {
    const auto& nodes = blocks_[bi];
    const double solen_mult = setup_.d - 1;
    double acc = 0.0;
    for (const auto& nd : nodes) {
        if (nd.env == 0.0 || nd.phi == 0.0) continue;
        double val = 0.0;
        if (q == DecayQuantity::Heat) {
            double amp = std::exp(-nd.r * nd.r * t) * nd.env;
            val = amp * amp;
        } else {
            std::array<cplx, 6> amp;
            for (int i = 0; i < 6; ++i) amp[i] = setup_.weights[i] * nd.env;
            nd.eig->apply(t, amp);
            switch (q) {
                case DecayQuantity::A: val = std::norm(amp[0]); break;
                case DecayQuantity::B: val = std::norm(amp[2]); break;
                case DecayQuantity::U:
                    val = std::norm(amp[1]) + solen_mult * std::norm(amp[4]);
                    break;
                case DecayQuantity::W:
                    val = std::norm(amp[3]) + solen_mult * std::norm(amp[5]);
                    break;
                case DecayQuantity::RelVelocity:
                    val = std::norm(amp[1] - amp[3]) + solen_mult * std::norm(amp[4] - amp[5]);
                    break;
                default: break;
            }
        }
        acc += nd.quad * nd.phi * nd.phi * val;
    }
    return std::sqrt(sphere_ * acc);
}

double ContinuumDecay::norm_at(DecayQuantity q, const lp::BesovSpec& spec, double t) const {
    if (t < 0.0) throw DomainError("decay curve: time must be nonnegative");
    if (q == DecayQuantity::Composite) {
        return norm_at(DecayQuantity::A, spec, t) + norm_at(DecayQuantity::U, spec, t) +
               norm_at(DecayQuantity::B, spec, t) + norm_at(DecayQuantity::W, spec, t);
    }
    double acc = 0.0;
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        int j = block_j_[bi];
        if (!lp::band_contains(spec.band, j)) continue;
        double term = std::pow(2.0, spec.s * j) * block_norm(bi, q, t);
        if (spec.r == lp::SumExp::One)
            acc += term;
        else
            acc = std::max(acc, term);
    }
    return acc;
}

std::vector<double> ContinuumDecay::curve(DecayQuantity q, const lp::BesovSpec& spec,
                                          const std::vector<double>& times) const {
    std::vector<double> out(times.size(), 0.0);
    parallel_for(0, times.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) out[i] = norm_at(q, spec, times[i]);
    });
    return out;
}

std::vector<std::pair<int, double>> ContinuumDecay::initial_block_profile() const {
    std::vector<std::pair<int, double>> out;
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        double n = block_norm(bi, DecayQuantity::A, 0.0);
        out.emplace_back(block_j_[bi], std::pow(2.0, setup_.sigma0 * block_j_[bi]) * n);
    }
    return out;
}

std::vector<double> besov_decay_curve(const ContinuumSetup& setup, DecayQuantity q,
                                      const lp::BesovSpec& spec, const std::vector<double>& times) {
    return ContinuumDecay(setup).curve(q, spec, times);
}

}  // namespace nserlx::linear
