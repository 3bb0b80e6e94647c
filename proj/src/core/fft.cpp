#include "nserlx/core/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

namespace nserlx {

namespace {
// FFTW's planner is not thread-safe; plan creation is serialized.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

struct Transformer::Impl {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    mutable std::vector<double> rscratch;
    mutable std::vector<cplx> cscratch;
};

Transformer::Transformer(const Grid& g) : grid_(g), impl_(std::make_unique<Impl>()) {
    grid_.validate();
    impl_->rscratch.resize(grid_.real_size());
    impl_->cscratch.resize(grid_.spec_size());

    int n[3] = {grid_.N, grid_.N, grid_.N};
    std::lock_guard<std::mutex> lock(planner_mutex());
    impl_->fwd = fftw_plan_dft_r2c(grid_.d, n, impl_->rscratch.data(),
                                   reinterpret_cast<fftw_complex*>(impl_->cscratch.data()),
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    impl_->bwd = fftw_plan_dft_c2r(grid_.d, n, reinterpret_cast<fftw_complex*>(impl_->cscratch.data()),
                                   impl_->rscratch.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!impl_->fwd || !impl_->bwd) throw DomainError("fft: plan creation failed");
}

Transformer::~Transformer() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
    if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
}

void Transformer::to_spectral(const RealField& in, SpectralField& out) const {
    if (!(in.grid == grid_)) throw DomainError("fft: grid mismatch");
    if (out.c.size() != grid_.spec_size()) out = SpectralField(grid_);
    std::memcpy(impl_->rscratch.data(), in.v.data(), sizeof(double) * in.v.size());
    fftw_execute_dft_r2c(impl_->fwd, impl_->rscratch.data(),
                         reinterpret_cast<fftw_complex*>(out.c.data()));
    const double scale = 1.0 / static_cast<double>(grid_.real_size());
    for (auto& z : out.c) z *= scale;
    out.grid = grid_;
}

void Transformer::to_physical(const SpectralField& in, RealField& out) const {
    if (!(in.grid == grid_)) throw DomainError("fft: grid mismatch");
    if (out.v.size() != grid_.real_size()) out = RealField(grid_);
    std::memcpy(impl_->cscratch.data(), in.c.data(), sizeof(cplx) * in.c.size());
    fftw_execute_dft_c2r(impl_->bwd, reinterpret_cast<fftw_complex*>(impl_->cscratch.data()),
                         out.v.data());
    out.grid = grid_;
}

}  // namespace nserlx
