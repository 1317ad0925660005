#pragma once

#include <complex>
#include <cstddef>

namespace nemlab::tf {

// Thin wrappers over FFTW with an internal thread-safe plan cache.
// All transforms are out-of-place unless noted; callers pass distinct buffers.
// Layout is row-major with x fastest: index = j*nx + i (so FFTW sees ny x nx).

/// Real-to-complex 2D DFT. out has size ny * (nx/2 + 1). Pass ny = 1 for 1D.
void fft_forward(int nx, int ny, const double* in, std::complex<double>* out);

/// Inverse of fft_forward, normalized so inverse(forward(x)) == x.
void fft_inverse(int nx, int ny, const std::complex<double>* in, double* out);

/// r2r transform kinds used by the bounded-domain solvers.
enum class R2R {
    DCT1,  // FFTW_REDFT00, size n, logical 2(n-1); self-inverse up to 2(n-1)
    DST1,  // FFTW_RODFT00, size m, logical 2(m+1); self-inverse up to 2(m+1)
};

/// Separable 2D r2r transform with per-axis kinds; nx is the fast axis size.
/// Unnormalized (FFTW convention). Pass ny = 1 with kind_y ignored for 1D.
void r2r_2d(R2R kind_x, R2R kind_y, int nx, int ny, const double* in, double* out);

void r2r_1d(R2R kind, int n, const double* in, double* out);

/// Logical size of a transform axis: DCT1 of n points -> 2(n-1),
/// DST1 of m points -> 2(m+1). Forward followed by backward multiplies by it.
inline double logical_size(R2R kind, int n) {
    return kind == R2R::DCT1 ? 2.0 * (n - 1) : 2.0 * (n + 1);
}

}  // namespace nemlab::tf
