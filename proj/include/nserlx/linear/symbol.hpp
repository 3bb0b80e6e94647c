#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "nserlx/core/errors.hpp"
#include "nserlx/model/params.hpp"

namespace nserlx::linear {

/// Helmholtz-reduced symbol of the linearized system at scalar frequency
/// xi. The compressible block acts on (a, v, b, z) with v, z the
/// potential velocity amplitudes; the solenoidal block on the transverse
/// amplitude pair (p, q):
///
///   a' = -xi v                 b' = -xi z
///   v' = P'(1) xi a - (2mu+lambda) xi^2 v - kappa (v - z)
///   z' =        xi b                      - kappa (z - v)
///   p' = -mu xi^2 p - kappa (p - q)
///   q' =            - kappa (q - p)
struct SymbolBlocks {
    double xi = 0.0;
    Eigen::Matrix4d compressible;
    Eigen::Matrix2d solenoidal;
};

SymbolBlocks symbol_blocks(double xi, const model::ModelParams& params);

/// Eigenvalues of the two blocks (4 compressible then 2 solenoidal),
/// each group sorted by descending real part, ties by ascending imag.
std::vector<std::complex<double>> symbol_eigenvalues(const SymbolBlocks& blocks);

/// Full (2d+2)x(2d+2) complex symbol at a vector frequency, acting on
/// (a, u_1..u_d, b, w_1..w_d). Cross-check oracle for the reduction.
Eigen::MatrixXcd full_symbol(const std::vector<double>& k, const model::ModelParams& params);

std::vector<std::complex<double>> sorted_eigenvalues(const Eigen::MatrixXcd& m);

}  // namespace nserlx::linear
