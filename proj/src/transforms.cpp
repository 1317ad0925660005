#include "nemlab/transforms.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace nemlab::tf {
namespace {

// fftw_plan creation is not thread-safe; execution on distinct buffers is.
// Plans are created once per shape with FFTW_UNALIGNED so the new-array
// execute functions accept any caller buffer.
std::mutex plan_mutex;

fftw_plan get_plan_r2c(int nx, int ny) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = cache.find({nx, ny});
    if (it != cache.end()) return it->second;
    std::vector<double> in(std::size_t(nx) * ny);
    std::vector<fftw_complex> out(std::size_t(ny) * (nx / 2 + 1));
    fftw_plan p = ny == 1
        ? fftw_plan_dft_r2c_1d(nx, in.data(), out.data(), FFTW_ESTIMATE | FFTW_UNALIGNED)
        : fftw_plan_dft_r2c_2d(ny, nx, in.data(), out.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache[{nx, ny}] = p;
    return p;
}

fftw_plan get_plan_c2r(int nx, int ny) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = cache.find({nx, ny});
    if (it != cache.end()) return it->second;
    std::vector<fftw_complex> in(std::size_t(ny) * (nx / 2 + 1));
    std::vector<double> out(std::size_t(nx) * ny);
    fftw_plan p = ny == 1
        ? fftw_plan_dft_c2r_1d(nx, in.data(), out.data(), FFTW_ESTIMATE | FFTW_UNALIGNED)
        : fftw_plan_dft_c2r_2d(ny, nx, in.data(), out.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache[{nx, ny}] = p;
    return p;
}

fftw_r2r_kind to_fftw(R2R k) { return k == R2R::DCT1 ? FFTW_REDFT00 : FFTW_RODFT00; }

fftw_plan get_plan_r2r(R2R kx, R2R ky, int nx, int ny) {
    static std::map<std::tuple<int, int, int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(int(kx), int(ky), nx, ny);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<double> in(std::size_t(nx) * ny), out(std::size_t(nx) * ny);
    fftw_plan p = ny == 1
        ? fftw_plan_r2r_1d(nx, in.data(), out.data(), to_fftw(kx), FFTW_ESTIMATE | FFTW_UNALIGNED)
        : fftw_plan_r2r_2d(ny, nx, in.data(), out.data(), to_fftw(ky), to_fftw(kx),
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache[key] = p;
    return p;
}

}  // namespace

void fft_forward(int nx, int ny, const double* in, std::complex<double>* out) {
    fftw_plan p = get_plan_r2c(nx, ny);
    fftw_execute_dft_r2c(p, const_cast<double*>(in), reinterpret_cast<fftw_complex*>(out));
}

void fft_inverse(int nx, int ny, const std::complex<double>* in, double* out) {
    // c2r destroys its input; copy so callers keep their spectra.
    std::vector<fftw_complex> tmp(std::size_t(ny) * (nx / 2 + 1));
    const auto* src = reinterpret_cast<const fftw_complex*>(in);
    for (std::size_t k = 0; k < tmp.size(); ++k) {
        tmp[k][0] = src[k][0];
        tmp[k][1] = src[k][1];
    }
    fftw_plan p = get_plan_c2r(nx, ny);
    fftw_execute_dft_c2r(p, tmp.data(), out);
    const double scale = 1.0 / (double(nx) * double(ny));
    for (std::size_t k = 0; k < std::size_t(nx) * ny; ++k) out[k] *= scale;
}

void r2r_2d(R2R kind_x, R2R kind_y, int nx, int ny, const double* in, double* out) {
    fftw_plan p = get_plan_r2r(kind_x, kind_y, nx, ny);
    fftw_execute_r2r(p, const_cast<double*>(in), out);
}

void r2r_1d(R2R kind, int n, const double* in, double* out) {
    fftw_plan p = get_plan_r2r(kind, kind, n, 1);
    fftw_execute_r2r(p, const_cast<double*>(in), out);
}

}  // namespace nemlab::tf
