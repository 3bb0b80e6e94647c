#pragma once

#include "nserlx/linear/propagator.hpp"
#include "nserlx/model/dynamics.hpp"
#include "nserlx/solver/config.hpp"

namespace nserlx::solver {

/// Integrating-factor time stepper: the constant-coefficient part
/// (including the drag coupling) is exponentiated exactly per mode, the
/// nonlinear terms are integrated by an explicit Runge-Kutta rule in the
/// transformed variable.
class Stepper {
public:
    Stepper(const Grid& grid, const model::ModelParams& params, Scheme scheme, double dt);

    double dt() const { return dt_; }
    const model::Dynamics& dynamics() const { return dyn_; }

    /// Advance one step. Preserves Hermitian symmetry structurally and
    /// the zero mode of a and b exactly (the nonlinear da/db parts are
    /// perfect divergences). Throws DomainError on vacuum breach or NaN,
    /// tagged with the running step index.
    void step(model::FlowState& state);

    int steps_taken() const { return steps_; }

private:
    Grid grid_;
    Scheme scheme_;
    double dt_;
    model::Dynamics dyn_;
    linear::PropagatorTable e_full_;
    linear::PropagatorTable e_half_;
    int steps_ = 0;

    model::Tendencies nonlinear_only(const model::FlowState& state) const;
};

/// Advective time-step suggestion: dt = min(C_adv dx / max(|u|, |w|, c_s),
/// cap), C_adv = 0.4, with the cap tightened by the f(a)-weighted viscous
/// term that the explicit stage sees.
double cfl_suggest(const model::FlowState& state, const SimConfig& config);

}  // namespace nserlx::solver
