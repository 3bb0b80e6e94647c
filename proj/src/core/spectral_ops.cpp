#include "nserlx/core/spectral_ops.hpp"

#include <cmath>

namespace nserlx {

SpectralField derivative(const SpectralField& f, int axis) {
    const Grid& g = f.grid;
    if (axis < 0 || axis >= g.d) throw DomainError("derivative: axis out of range");
    SpectralField out(g);
    const double kf = g.k_fund();
    for (std::size_t s = 0; s < f.size(); ++s) {
        auto m = g.mode(s);
        out.c[s] = f.c[s] * cplx(0.0, kf * m[axis]);
    }
    return out;
}

SpectralField laplacian(const SpectralField& f) {
    const Grid& g = f.grid;
    SpectralField out(g);
    const double kf2 = g.k_fund() * g.k_fund();
    for (std::size_t s = 0; s < f.size(); ++s)
        out.c[s] = f.c[s] * (-kf2 * static_cast<double>(g.mode_norm2(s)));
    return out;
}

SpectralField divergence(const std::vector<SpectralField>& f) {
    const Grid& g = f.at(0).grid;
    if (static_cast<int>(f.size()) != g.d) throw DomainError("divergence: needs d components");
    SpectralField out(g);
    const double kf = g.k_fund();
    for (std::size_t s = 0; s < out.size(); ++s) {
        auto m = g.mode(s);
        cplx acc(0.0, 0.0);
        for (int i = 0; i < g.d; ++i) acc += f[i].c[s] * cplx(0.0, kf * m[i]);
        out.c[s] = acc;
    }
    return out;
}

std::vector<SpectralField> gradient(const SpectralField& f) {
    std::vector<SpectralField> out;
    out.reserve(f.grid.d);
    for (int i = 0; i < f.grid.d; ++i) out.push_back(derivative(f, i));
    return out;
}

namespace {
double box_volume(const Grid& g) {
    double v = 1.0;
    for (int i = 0; i < g.d; ++i) v *= g.L;
    return v;
}
}  // namespace

double l2_norm(const SpectralField& f) {
    const Grid& g = f.grid;
    double acc = 0.0;
    for (std::size_t s = 0; s < f.size(); ++s) acc += g.mult(s) * std::norm(f.c[s]);
    return std::sqrt(box_volume(g) * acc);
}

double l2_norm(const std::vector<SpectralField>& f) {
    double acc = 0.0;
    for (const auto& c : f) {
        double n = l2_norm(c);
        acc += n * n;
    }
    return std::sqrt(acc);
}

double l2_inner(const SpectralField& f, const SpectralField& g) {
    const Grid& gr = f.grid;
    double acc = 0.0;
    for (std::size_t s = 0; s < f.size(); ++s)
        acc += gr.mult(s) * (f.c[s].real() * g.c[s].real() + f.c[s].imag() * g.c[s].imag());
    return box_volume(gr) * acc;
}

double l2_inner(const std::vector<SpectralField>& f, const std::vector<SpectralField>& g) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += l2_inner(f[i], g[i]);
    return acc;
}

double mean_value(const SpectralField& f) { return f.c[0].real(); }

void subtract_mean(SpectralField& f) { f.c[0] = cplx(0.0, 0.0); }

void apply_dealias_mask(SpectralField& f) {
    const Grid& g = f.grid;
    for (std::size_t s = 0; s < f.size(); ++s)
        if (!g.in_dealias_band(s)) f.c[s] = cplx(0.0, 0.0);
}

namespace {
// Flat spectral index of an explicit index tuple (last entry already in
// the reduced range).
std::size_t flat_index(const Grid& g, int i0, int i1, int i2) {
    const std::size_t nh = static_cast<std::size_t>(g.N / 2 + 1);
    if (g.d == 2) return static_cast<std::size_t>(i0) * nh + static_cast<std::size_t>(i1);
    return (static_cast<std::size_t>(i0) * g.N + static_cast<std::size_t>(i1)) * nh +
           static_cast<std::size_t>(i2);
}

template <typename Fn>
void for_conjugate_pairs(const Grid& g, Fn&& fn) {
    const int N = g.N;
    for (int il : {0, N / 2}) {
        if (g.d == 2) {
            for (int i0 = 0; i0 <= N / 2; ++i0) {
                int j0 = (N - i0) % N;
                fn(flat_index(g, i0, il, 0), flat_index(g, j0, il, 0), i0 == j0);
            }
        } else {
            for (int i0 = 0; i0 < N; ++i0) {
                for (int i1 = 0; i1 < N; ++i1) {
                    int j0 = (N - i0) % N;
                    int j1 = (N - i1) % N;
                    // visit each unordered pair once
                    if (std::make_pair(i0, i1) > std::make_pair(j0, j1)) continue;
                    fn(flat_index(g, i0, i1, il), flat_index(g, j0, j1, il),
                       i0 == j0 && i1 == j1);
                }
            }
        }
    }
}
}  // namespace

void impose_hermitian(SpectralField& f) {
    for_conjugate_pairs(f.grid, [&](std::size_t a, std::size_t b, bool self) {
        if (self) {
            f.c[a] = cplx(f.c[a].real(), 0.0);
        } else {
            cplx avg = 0.5 * (f.c[a] + std::conj(f.c[b]));
            f.c[a] = avg;
            f.c[b] = std::conj(avg);
        }
    });
}

double hermitian_asymmetry(const SpectralField& f) {
    double worst = 0.0;
    for_conjugate_pairs(f.grid, [&](std::size_t a, std::size_t b, bool self) {
        double dev = self ? std::abs(f.c[a].imag()) : std::abs(f.c[a] - std::conj(f.c[b]));
        if (dev > worst) worst = dev;
    });
    return worst;
}

double max_abs(const RealField& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::abs(x));
    return m;
}

bool has_nan(const SpectralField& f) {
    for (const auto& z : f.c)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return true;
    return false;
}

}  // namespace nserlx
