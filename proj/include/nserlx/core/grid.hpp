#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "nserlx/core/errors.hpp"

namespace nserlx {

/// Periodic box [0,L)^d sampled on N points per dimension.
///
/// Real fields use row-major N^d storage. Spectral fields use the
/// half-complex (r2c) layout with the last dimension reduced to N/2+1,
/// so Hermitian symmetry is structural except on the self-conjugate
/// planes k_last in {0, N/2}.
struct Grid {
    int d = 2;        // spatial dimension, 2 or 3
    int N = 64;       // modes per dimension, even
    double L = 2.0 * M_PI;  // box length

    Grid() = default;
    Grid(int d_, int N_, double L_) : d(d_), N(N_), L(L_) { validate(); }

    void validate() const {
        if (d != 2 && d != 3) throw DomainError("grid: dimension must be 2 or 3, got " + std::to_string(d));
        if (N < 2 || N % 2 != 0) throw DomainError("grid: N must be even and positive, got " + std::to_string(N));
        if (!(L > 0.0)) throw DomainError("grid: box length must be positive");
    }

    std::size_t real_size() const {
        std::size_t n = 1;
        for (int i = 0; i < d; ++i) n *= static_cast<std::size_t>(N);
        return n;
    }
    std::size_t spec_size() const {
        std::size_t n = static_cast<std::size_t>(N / 2 + 1);
        for (int i = 0; i < d - 1; ++i) n *= static_cast<std::size_t>(N);
        return n;
    }

    double dx() const { return L / N; }
    /// Fundamental wavenumber 2*pi/L.
    double k_fund() const { return 2.0 * M_PI / L; }
    /// Largest |k| representable (the corner mode).
    double k_max() const { return k_fund() * 0.5 * N * std::sqrt(static_cast<double>(d)); }

    /// Integer mode vector of a flat spectral index. Entries lie in
    /// [-N/2, N/2]; the last entry is in [0, N/2].
    std::array<int, 3> mode(std::size_t s) const {
        const int nh = N / 2 + 1;
        std::array<int, 3> m{0, 0, 0};
        if (d == 2) {
            int i0 = static_cast<int>(s / nh);
            m[0] = i0 <= N / 2 ? i0 : i0 - N;
            m[1] = static_cast<int>(s % nh);
        } else {
            const std::size_t plane = static_cast<std::size_t>(N) * nh;
            int i0 = static_cast<int>(s / plane);
            std::size_t rem = s % plane;
            int i1 = static_cast<int>(rem / nh);
            m[0] = i0 <= N / 2 ? i0 : i0 - N;
            m[1] = i1 <= N / 2 ? i1 : i1 - N;
            m[2] = static_cast<int>(rem % nh);
        }
        return m;
    }

    /// Parseval multiplicity: 2 for modes whose conjugate partner is not
    /// stored (0 < k_last < N/2), otherwise 1.
    double mult(std::size_t s) const {
        const int nh = N / 2 + 1;
        int il = static_cast<int>(s % nh);
        return (il == 0 || il == N / 2) ? 1.0 : 2.0;
    }

    /// |m|^2 in integer mode units.
    int64_t mode_norm2(std::size_t s) const {
        auto m = mode(s);
        int64_t q = 0;
        for (int i = 0; i < d; ++i) q += static_cast<int64_t>(m[i]) * m[i];
        return q;
    }

    /// Physical wavevector magnitude of a flat spectral index.
    double k_abs(std::size_t s) const { return k_fund() * std::sqrt(static_cast<double>(mode_norm2(s))); }

    /// 2/3-rule dealias predicate: keep modes with every |m_i|*3 <= N.
    bool in_dealias_band(std::size_t s) const {
        auto m = mode(s);
        for (int i = 0; i < d; ++i)
            if (std::abs(m[i]) * 3 > N) return false;
        return true;
    }

    bool operator==(const Grid& o) const { return d == o.d && N == o.N && L == o.L; }
};

}  // namespace nserlx
