#pragma once

#include "nserlx/model/params.hpp"
#include "nserlx/model/state.hpp"

namespace nserlx::model {

/// Pointwise coefficient functions of the nonlinearity.
inline double g_of(double a, const ModelParams& p) {
    return p.p_prime(p.rho_bar) - p.p_prime(1.0 + a) / (1.0 + a);
}
inline double f_of(double a) { return -a / (1.0 + a); }
inline double h_of(double a, double b) { return (a + 1.0 - std::exp(b)) / (1.0 + a); }

/// (rho, u, n, w) -> (a, u, b, w) with a = rho - 1, b = log n.
FlowState reformulate(const RealField& rho, const std::vector<RealField>& u, const RealField& n,
                      const std::vector<RealField>& w, const Transformer& fft);
/// Inverse map; returns (rho, u, n, w) as physical fields.
struct PrimitiveFields {
    RealField rho, n;
    std::vector<RealField> u, w;
};
PrimitiveFields dereformulate(const FlowState& state, const Transformer& fft);

/// Evaluator for the perturbation-system right-hand sides. Owns scratch
/// buffers, so one instance per thread of concurrent use.
class Dynamics {
public:
    Dynamics(const Grid& grid, const ModelParams& params);

    const ModelParams& params() const { return params_; }
    const Transformer& fft() const { return fft_; }

    /// Full tendencies of the perturbation system; nonlinear products are
    /// formed in physical space and dealiased with the 2/3 rule.
    Tendencies rhs(const FlowState& state) const;

    /// Constant-coefficient part only (per-mode symbol application).
    Tendencies rhs_linear(const FlowState& state) const;

    /// Nonlinear tendencies only (rhs minus the constant-coefficient part).
    Tendencies rhs_nonlinear(const FlowState& state) const;

    /// The momentum-equation nonlinearity g(a) grad a + f(a) Lu
    /// + kappa h(a,b) (u - w), dealiased, in spectral form.
    std::vector<SpectralField> nonlinear_G(const FlowState& state) const;

    /// Grid-max norm of [du - dw] minus the damped relative-velocity
    /// equation's right-hand side; an exact algebraic identity, so the
    /// result is floating-point noise.
    double relative_velocity_residual(const FlowState& state) const;

    /// Throws if min(1 + a) < 1e-6, naming the worst grid point.
    void check_vacuum(const RealField& a_phys) const;

private:
    Grid grid_;
    ModelParams params_;
    Transformer fft_;

    struct NonlinearParts;
    NonlinearParts nonlinear_parts(const FlowState& state) const;
};

}  // namespace nserlx::model
