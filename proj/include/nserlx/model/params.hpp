#pragma once

#include <cmath>
#include <string>

#include "nserlx/core/errors.hpp"

namespace nserlx::model {

enum class PressureLaw { Isothermal, Gamma };

/// Physical parameters of the two-phase system. The default values are
/// the normalized ones (P'(1) = kappa = rho_bar = n_bar = mu = 1,
/// lambda = -1), under which the perturbation equations take their
/// simplest form.
struct ModelParams {
    double mu = 1.0;
    double lambda = -1.0;
    double kappa = 1.0;
    double rho_bar = 1.0;
    double n_bar = 1.0;
    PressureLaw pressure = PressureLaw::Isothermal;
    double gamma = 1.4;  // only used by the gamma law P(rho) = rho^gamma / gamma

    void validate() const {
        if (!(mu > 0.0)) throw DomainError("params: mu must be positive");
        if (!(2.0 * mu + lambda > 0.0)) throw DomainError("params: 2*mu + lambda must be positive");
        if (!(kappa > 0.0)) throw DomainError("params: kappa must be positive");
        if (!(rho_bar > 0.0) || !(n_bar > 0.0))
            throw DomainError("params: equilibrium densities must be positive");
        if (pressure == PressureLaw::Gamma && !(gamma > 0.0))
            throw DomainError("params: gamma must be positive");
        if (!(p_prime(rho_bar) > 0.0)) throw DomainError("params: P'(rho_bar) must be positive");
    }

    /// The perturbation form a = rho - 1, b = log n assumes the
    /// normalized equilibrium; reject anything else loudly.
    void require_normalized_equilibrium() const {
        if (rho_bar != 1.0 || n_bar != 1.0)
            throw DomainError(
                "params: perturbation dynamics require the normalized equilibrium rho_bar = n_bar "
                "= 1 (rescale the system first)");
    }

    double p(double rho) const {
        return pressure == PressureLaw::Isothermal ? rho : std::pow(rho, gamma) / gamma;
    }
    double p_prime(double rho) const {
        return pressure == PressureLaw::Isothermal ? 1.0 : std::pow(rho, gamma - 1.0);
    }

    /// Viscous operator coefficient seen by potential modes.
    double visc_potential() const { return 2.0 * mu + lambda; }
    /// ... and by solenoidal modes.
    double visc_solenoidal() const { return mu; }
};

}  // namespace nserlx::model
