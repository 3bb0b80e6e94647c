#pragma once

#include <memory>

#include "nserlx/core/field.hpp"

namespace nserlx {

/// FFTW-backed transform pair for one grid. Plans are created once
/// (FFTW_ESTIMATE, so planning is deterministic) and reused; the c2r
/// direction works on an internal scratch copy because FFTW destroys
/// its complex input for multi-dimensional c2r transforms.
class Transformer {
public:
    explicit Transformer(const Grid& g);
    ~Transformer();

    Transformer(const Transformer&) = delete;
    Transformer& operator=(const Transformer&) = delete;

    const Grid& grid() const { return grid_; }

    /// physical -> spectral (applies the 1/N^d normalization).
    void to_spectral(const RealField& in, SpectralField& out) const;
    /// spectral -> physical.
    void to_physical(const SpectralField& in, RealField& out) const;

    RealField to_physical(const SpectralField& in) const {
        RealField out(grid_);
        to_physical(in, out);
        return out;
    }
    SpectralField to_spectral(const RealField& in) const {
        SpectralField out(grid_);
        to_spectral(in, out);
        return out;
    }

private:
    Grid grid_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace nserlx
