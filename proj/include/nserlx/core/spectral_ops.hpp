#pragma once

#include "nserlx/core/field.hpp"

namespace nserlx {

/// d/dx_axis, computed as multiplication by i*k_axis.
SpectralField derivative(const SpectralField& f, int axis);
/// Laplacian, multiplication by -|k|^2.
SpectralField laplacian(const SpectralField& f);
/// sum_i d/dx_i f_i for a d-component spectral field.
SpectralField divergence(const std::vector<SpectralField>& f);
/// (d/dx_0 f, ..., d/dx_{d-1} f).
std::vector<SpectralField> gradient(const SpectralField& f);

/// L^2(box) norm via Parseval.
double l2_norm(const SpectralField& f);
double l2_norm(const std::vector<SpectralField>& f);
/// L^2 inner product (f|g) of real fields, via Parseval.
double l2_inner(const SpectralField& f, const SpectralField& g);
double l2_inner(const std::vector<SpectralField>& f, const std::vector<SpectralField>& g);

/// Mean over the box (the k=0 coefficient).
double mean_value(const SpectralField& f);
void subtract_mean(SpectralField& f);

/// Zero every mode outside the 2/3-rule band.
void apply_dealias_mask(SpectralField& f);

/// Restore exact conjugate symmetry on the self-conjugate planes
/// (k_last = 0 and k_last = N/2). Needed after synthesizing spectra
/// directly; transforms of real data satisfy it already.
void impose_hermitian(SpectralField& f);

/// Largest asymmetry |fhat(k) - conj(fhat(-k))| over the self-conjugate
/// planes; zero for a valid real-field spectrum.
double hermitian_asymmetry(const SpectralField& f);

/// max over physical samples (requires a transform-free bound helper in
/// callers; provided here for RealField convenience).
double max_abs(const RealField& f);
bool has_nan(const SpectralField& f);

}  // namespace nserlx
