#include "nserlx/linear/symbol.hpp"

#include <algorithm>
#include <cmath>

namespace nserlx::linear {

SymbolBlocks symbol_blocks(double xi, const model::ModelParams& params) {
    if (xi < 0.0) throw DomainError("symbol: frequency must be nonnegative");
    params.validate();
    params.require_normalized_equilibrium();
    const double pp = params.p_prime(1.0);
    const double nu_c = params.visc_potential();
    const double nu_s = params.visc_solenoidal();
    const double ka = params.kappa;

    SymbolBlocks out;
    out.xi = xi;
    out.compressible << 0.0, -xi, 0.0, 0.0,            //
        pp * xi, -nu_c * xi * xi - ka, 0.0, ka,        //
        0.0, 0.0, 0.0, -xi,                            //
        0.0, ka, xi, -ka;
    out.solenoidal << -nu_s * xi * xi - ka, ka,        //
        ka, -ka;
    return out;
}

std::vector<std::complex<double>> symbol_eigenvalues(const SymbolBlocks& blocks) {
    auto sort_group = [](std::vector<std::complex<double>>& v) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            if (a.real() != b.real()) return a.real() > b.real();
            return a.imag() < b.imag();
        });
    };
    Eigen::EigenSolver<Eigen::Matrix4d> es4(blocks.compressible, false);
    Eigen::EigenSolver<Eigen::Matrix2d> es2(blocks.solenoidal, false);
    std::vector<std::complex<double>> c(es4.eigenvalues().data(), es4.eigenvalues().data() + 4);
    std::vector<std::complex<double>> s(es2.eigenvalues().data(), es2.eigenvalues().data() + 2);
    sort_group(c);
    sort_group(s);
    c.insert(c.end(), s.begin(), s.end());
    return c;
}

Eigen::MatrixXcd full_symbol(const std::vector<double>& k, const model::ModelParams& params) {
    params.validate();
    params.require_normalized_equilibrium();
    const int d = static_cast<int>(k.size());
    if (d != 2 && d != 3) throw DomainError("full symbol: k must have 2 or 3 components");
    const int n = 2 * d + 2;
    const std::complex<double> I(0.0, 1.0);
    double k2 = 0.0;
    for (double ki : k) k2 += ki * ki;
    const double pp = params.p_prime(1.0);
    const double mu = params.mu, ml = params.mu + params.lambda, ka = params.kappa;

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    // index map: 0 = a, 1..d = u, d+1 = b, d+2..2d+1 = w
    for (int i = 0; i < d; ++i) {
        m(0, 1 + i) = -I * k[i];                          // a' = -div u
        m(1 + i, 0) = -pp * I * k[i];                     // -P'(1) grad a
        m(1 + i, 1 + i) += -mu * k2 - ka;                 // mu Lap u - kappa u
        for (int q = 0; q < d; ++q) m(1 + i, 1 + q) += -ml * k[i] * k[q];  // (mu+lambda) grad div u
        m(1 + i, d + 2 + i) = ka;                         // + kappa w
        m(d + 1, d + 2 + i) = -I * k[i];                  // b' = -div w
        m(d + 2 + i, d + 1) = -I * k[i];                  // -grad b
        m(d + 2 + i, d + 2 + i) = -ka;                    // -kappa w
        m(d + 2 + i, 1 + i) = ka;                         // +kappa u
    }
    return m;
}

std::vector<std::complex<double>> sorted_eigenvalues(const Eigen::MatrixXcd& m) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    std::vector<std::complex<double>> v(es.eigenvalues().data(),
                                        es.eigenvalues().data() + m.rows());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() < b.imag();
    });
    return v;
}

}  // namespace nserlx::linear
