#pragma once

#include <complex>
#include <vector>

#include "nserlx/core/grid.hpp"

namespace nserlx {

using cplx = std::complex<double>;

/// Spectral coefficients in the half-complex layout of Grid. The stored
/// convention is f(x) = sum_k fhat(k) exp(i k.x), i.e. coefficients are
/// already divided by N^d.
struct SpectralField {
    Grid grid;
    std::vector<cplx> c;

    SpectralField() = default;
    explicit SpectralField(const Grid& g) : grid(g), c(g.spec_size(), cplx(0.0, 0.0)) {}

    std::size_t size() const { return c.size(); }
    cplx& operator[](std::size_t i) { return c[i]; }
    const cplx& operator[](std::size_t i) const { return c[i]; }

    void set_zero() { std::fill(c.begin(), c.end(), cplx(0.0, 0.0)); }
};

/// Physical samples on the N^d grid, row-major.
struct RealField {
    Grid grid;
    std::vector<double> v;

    RealField() = default;
    explicit RealField(const Grid& g) : grid(g), v(g.real_size(), 0.0) {}

    std::size_t size() const { return v.size(); }
    double& operator[](std::size_t i) { return v[i]; }
    const double& operator[](std::size_t i) const { return v[i]; }

    void set_zero() { std::fill(v.begin(), v.end(), 0.0); }
};

}  // namespace nserlx
