#include "nemlab/helmholtz.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "nemlab/calculus.hpp"
#include "nemlab/transforms.hpp"

namespace nemlab {
namespace {

using cplx = std::complex<double>;

inline double wavenumber(int idx, int n, double L) {
    int k = idx <= n / 2 ? idx : idx - n;
    return 2.0 * M_PI * k / L;
}

inline bool nyquist(int idx, int n) { return n % 2 == 0 && idx == n / 2; }

// ---- bounded-rectangle cosine machinery -----------------------------------
//
// N = nx-1 intervals per axis. Cosine modes C_k(x_i) = cos(pi k i / N) for
// k = 0..N; sine modes S_k vanish at the walls and exist on the grid for
// k = 1..N-1 (S_N samples to zero). Trapezoidal norms:
//   <C_k, C_k> = h*N for k in {0, N}, h*N/2 otherwise; <S_k, S_k> = h*N/2.
struct Axis {
    int n;        // points
    int N;        // intervals = n-1
    double h;
    double L;
    double kappa(int k) const { return M_PI * k / L; }
    double cosnorm(int k) const { return h * ((k == 0 || k == N) ? double(N) : N / 2.0); }
    double sinnorm(int k) const { return (k >= 1 && k <= N - 1) ? h * N / 2.0 : 0.0; }
};

Axis make_axis(const Grid& g, int a) {
    return Axis{g.n(a), g.n(a) - 1, g.h(a), g.length(a)};
}

// Forward DCT-I x DCT-I of a full-grid scalar; unnormalized FFTW convention.
void dct2_forward(const Grid& g, const double* in, std::vector<double>& out) {
    out.assign(g.size(), 0.0);
    tf::r2r_2d(tf::R2R::DCT1, tf::R2R::DCT1, g.nx(), g.dim() == 2 ? g.ny() : 1, in, out.data());
}

void dct2_inverse(const Grid& g, const std::vector<double>& in, double* out) {
    tf::r2r_2d(tf::R2R::DCT1, tf::R2R::DCT1, g.nx(), g.dim() == 2 ? g.ny() : 1, in.data(), out);
    double scale = 1.0 / tf::logical_size(tf::R2R::DCT1, g.nx());
    if (g.dim() == 2) scale /= tf::logical_size(tf::R2R::DCT1, g.ny());
    for (std::size_t k = 0; k < g.size(); ++k) out[k] *= scale;
}

// Analysis of the x-component of a vector field in the sin_x (x) cos_y basis.
// Returns the raw FFTW coefficients R0[l * (nx-2) + (k-1)], k = 1..N-1.
void sincos_forward_x(const Grid& g, const double* v0, std::vector<double>& out) {
    const int mx = g.nx() - 2, ny = g.dim() == 2 ? g.ny() : 1;
    std::vector<double> slab(std::size_t(mx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < mx; ++i) slab[std::size_t(j) * mx + i] = v0[g.idx(i + 1, j)];
    out.assign(slab.size(), 0.0);
    tf::r2r_2d(tf::R2R::DST1, tf::R2R::DCT1, mx, ny, slab.data(), out.data());
}

// Synthesize sum_{k,l} b_kl S_k(x) C_l(y) from function coefficients
// b[l * mx + (k-1)]. Raw DST-I doubles every sine coefficient and raw DCT-I
// doubles interior cosine coefficients, so pre-weight and transform once.
void sincos_synth_x(const Grid& g, const std::vector<double>& b, double* v0) {
    const int mx = g.nx() - 2, ny = g.dim() == 2 ? g.ny() : 1;
    const int Ny = ny - 1;
    std::vector<double> coef(std::size_t(mx) * ny);
    for (int l = 0; l < ny; ++l) {
        double wl = (g.dim() == 2 && l != 0 && l != Ny) ? 0.5 : 1.0;
        for (int i = 0; i < mx; ++i)
            coef[std::size_t(l) * mx + i] = 0.5 * wl * b[std::size_t(l) * mx + i];
    }
    std::vector<double> slab(coef.size());
    tf::r2r_2d(tf::R2R::DST1, tf::R2R::DCT1, mx, ny, coef.data(), slab.data());
    for (std::size_t k = 0; k < g.size(); ++k) v0[k] = 0.0;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < mx; ++i) v0[g.idx(i + 1, j)] = slab[std::size_t(j) * mx + i];
}

// Analysis/synthesis of the y-component in the cos_x (x) sin_y basis.
void cossin_forward_y(const Grid& g, const double* v1, std::vector<double>& out) {
    const int nx = g.nx(), my = g.ny() - 2;
    std::vector<double> slab(std::size_t(nx) * my);
    for (int j = 0; j < my; ++j)
        for (int i = 0; i < nx; ++i) slab[std::size_t(j) * nx + i] = v1[g.idx(i, j + 1)];
    out.assign(slab.size(), 0.0);
    tf::r2r_2d(tf::R2R::DCT1, tf::R2R::DST1, nx, my, slab.data(), out.data());
}

/// Synthesize sum_{k,l} b_kl C_k(x) S_l(y) from function coefficients
/// b[(l-1) * nx + k].
void cossin_synth_y(const Grid& g, const std::vector<double>& b, double* v1) {
    const int nx = g.nx(), my = g.ny() - 2;
    const int Nx = nx - 1;
    std::vector<double> coef(std::size_t(nx) * my);
    for (int j = 0; j < my; ++j)
        for (int k = 0; k < nx; ++k) {
            double wk = (k != 0 && k != Nx) ? 0.5 : 1.0;
            coef[std::size_t(j) * nx + k] = 0.5 * wk * b[std::size_t(j) * nx + k];
        }
    std::vector<double> slab(coef.size());
    tf::r2r_2d(tf::R2R::DCT1, tf::R2R::DST1, nx, my, coef.data(), slab.data());
    for (std::size_t k = 0; k < g.size(); ++k) v1[k] = 0.0;
    for (int j = 0; j < my; ++j)
        for (int i = 0; i < nx; ++i) v1[g.idx(i, j + 1)] = slab[std::size_t(j) * nx + i];
}

// Projection coefficients of v onto the gradient family g_kl = grad(C_k C_l),
// c[l * nx + k], plus analysis coefficients a0, a1 of the components.
struct BoundedAnalysis {
    std::vector<double> c;    // projection coefficient per cosine mode
    std::vector<double> a0;   // v0 sin_x cos_y function coefficients, k=1..N-1
    std::vector<double> a1;   // v1 cos_x sin_y function coefficients, l=1..M-1
};

BoundedAnalysis analyze_bounded(const Grid& g, const VectorField& v) {
    const Axis X = make_axis(g, 0);
    const bool two_d = g.dim() == 2;
    const Axis Y = two_d ? make_axis(g, 1) : Axis{1, 0, 1.0, 1.0};
    const int nx = g.nx(), ny = two_d ? g.ny() : 1;
    const int mx = nx - 2, my = two_d ? ny - 2 : 0;

    BoundedAnalysis r;
    std::vector<double> R0, R1;
    sincos_forward_x(g, v.data(0), R0);
    if (two_d) cossin_forward_y(g, v.data(1), R1);

    const double quad = X.h * (two_d ? Y.h : 1.0) / (two_d ? 4.0 : 2.0);
    r.a0.assign(std::size_t(mx) * std::max(ny, 1), 0.0);
    if (two_d) r.a1.assign(std::size_t(nx) * my, 0.0);
    r.c.assign(std::size_t(nx) * ny, 0.0);

    for (int l = 0; l < ny; ++l) {
        for (int k = 0; k < nx; ++k) {
            double T0 = 0.0, T1 = 0.0;
            if (k >= 1 && k <= X.N - 1) {
                T0 = quad * R0[std::size_t(l) * mx + (k - 1)];
                double denom0 = X.sinnorm(k) * (two_d ? Y.cosnorm(l) : 1.0);
                r.a0[std::size_t(l) * mx + (k - 1)] = T0 / denom0;
            }
            if (two_d && l >= 1 && l <= Y.N - 1) {
                T1 = quad * R1[std::size_t(l - 1) * nx + k];
                r.a1[std::size_t(l - 1) * nx + k] = T1 / (X.cosnorm(k) * Y.sinnorm(l));
            }
            const double kx = X.kappa(k);
            const double ky = two_d ? Y.kappa(l) : 0.0;
            double denom = kx * kx * X.sinnorm(k) * (two_d ? Y.cosnorm(l) : 1.0);
            if (two_d) denom += ky * ky * X.cosnorm(k) * Y.sinnorm(l);
            r.c[std::size_t(l) * nx + k] = denom > 0.0 ? (-kx * T0 - ky * T1) / denom : 0.0;
        }
    }
    return r;
}

VectorField bounded_project_Q(const Grid& g, const VectorField& v) {
    const Axis X = make_axis(g, 0);
    const bool two_d = g.dim() == 2;
    const Axis Y = two_d ? make_axis(g, 1) : Axis{1, 0, 1.0, 1.0};
    const int nx = g.nx(), ny = two_d ? g.ny() : 1;
    const int mx = nx - 2, my = two_d ? ny - 2 : 0;

    BoundedAnalysis an = analyze_bounded(g, v);
    VectorField q(g);

    std::vector<double> B0(std::size_t(mx) * ny, 0.0);
    for (int l = 0; l < ny; ++l)
        for (int k = 1; k <= X.N - 1; ++k)
            B0[std::size_t(l) * mx + (k - 1)] = -X.kappa(k) * an.c[std::size_t(l) * nx + k];
    sincos_synth_x(g, B0, q.data(0));

    if (two_d) {
        std::vector<double> B1(std::size_t(nx) * my, 0.0);
        for (int l = 1; l <= Y.N - 1; ++l)
            for (int k = 0; k < nx; ++k)
                B1[std::size_t(l - 1) * nx + k] = -Y.kappa(l) * an.c[std::size_t(l) * nx + k];
        cossin_synth_y(g, B1, q.data(1));
    }
    return q;
}

ScalarField bounded_compatible_div(const Grid& g, const VectorField& v) {
    const Axis X = make_axis(g, 0);
    const bool two_d = g.dim() == 2;
    const Axis Y = two_d ? make_axis(g, 1) : Axis{1, 0, 1.0, 1.0};
    const int nx = g.nx(), ny = two_d ? g.ny() : 1;
    const int mx = nx - 2;

    BoundedAnalysis an = analyze_bounded(g, v);
    std::vector<double> dhat(std::size_t(nx) * ny, 0.0);
    for (int l = 0; l < ny; ++l) {
        for (int k = 0; k < nx; ++k) {
            double s = 0.0;
            if (k >= 1 && k <= X.N - 1) s += X.kappa(k) * an.a0[std::size_t(l) * mx + (k - 1)];
            if (two_d && l >= 1 && l <= Y.N - 1) s += Y.kappa(l) * an.a1[std::size_t(l - 1) * nx + k];
            dhat[std::size_t(l) * nx + k] = s;
        }
    }
    // Synthesize sum_kl dhat_kl C_k C_l. The raw DCT-I transform weights the
    // interior coefficients by 2 per axis, so fold in 1/2 there first.
    ScalarField out(g);
    std::vector<double> fftw_coef(dhat.size());
    for (int l = 0; l < ny; ++l)
        for (int k = 0; k < nx; ++k) {
            double w = (k == 0 || k == X.N) ? 1.0 : 0.5;
            if (two_d) w *= (l == 0 || l == Y.N) ? 1.0 : 0.5;
            fftw_coef[std::size_t(l) * nx + k] = dhat[std::size_t(l) * nx + k] * w;
        }
    std::vector<double> synth(fftw_coef.size());
    tf::r2r_2d(tf::R2R::DCT1, tf::R2R::DCT1, nx, two_d ? ny : 1, fftw_coef.data(), synth.data());
    for (std::size_t k = 0; k < g.size(); ++k) out.data()[k] = synth[k];
    return out;
}

ScalarField bounded_inv_laplacian(const Grid& g, const ScalarField& gfield) {
    const Axis X = make_axis(g, 0);
    const bool two_d = g.dim() == 2;
    const Axis Y = two_d ? make_axis(g, 1) : Axis{1, 0, 1.0, 1.0};
    const int nx = g.nx(), ny = two_d ? g.ny() : 1;

    const double gint = integrate(gfield);
    const double gl2 = l2_norm(gfield);
    if (std::abs(gint) > 1e-8 * gl2 * std::sqrt(g.volume()) + 1e-300)
        throw CompatibilityError("inv_laplacian: Neumann data violates zero-mean compatibility");

    std::vector<double> spec;
    dct2_forward(g, gfield.data(), spec);
    for (int l = 0; l < ny; ++l) {
        for (int k = 0; k < nx; ++k) {
            double kx = X.kappa(k), ky = two_d ? Y.kappa(l) : 0.0;
            double lam = kx * kx + ky * ky;
            std::size_t id = std::size_t(l) * nx + k;
            spec[id] = lam > 0.0 ? spec[id] / (-lam) : 0.0;
        }
    }
    ScalarField out(g);
    dct2_inverse(g, spec, out.data());
    return out;
}

// ---- periodic machinery ----------------------------------------------------

ScalarField periodic_inv_laplacian(const Grid& g, const ScalarField& gfield) {
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int nkx = nx / 2 + 1;
    std::vector<cplx> spec(std::size_t(ny) * nkx);
    tf::fft_forward(nx, ny, gfield.data(), spec.data());
    for (int j = 0; j < ny; ++j) {
        double ky = g.dim() == 2 ? wavenumber(j, ny, g.ly()) : 0.0;
        for (int i = 0; i < nkx; ++i) {
            double kx = wavenumber(i, nx, g.lx());
            double k2 = kx * kx + ky * ky;
            cplx& c = spec[std::size_t(j) * nkx + i];
            c = k2 > 0.0 ? c / (-k2) : cplx(0.0, 0.0);  // k = 0: mean removed
        }
    }
    ScalarField out(g);
    tf::fft_inverse(nx, ny, spec.data(), out.data());
    return out;
}

// grad lap^-1 div applied per Fourier mode; Nyquist modes carry no consistent
// odd-derivative and are assigned to P.
VectorField periodic_project_Q(const Grid& g, const VectorField& v) {
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int nkx = nx / 2 + 1;
    const int dim = g.dim();
    std::vector<std::vector<cplx>> spec(dim, std::vector<cplx>(std::size_t(ny) * nkx));
    for (int c = 0; c < dim; ++c) tf::fft_forward(nx, ny, v.data(c), spec[c].data());

    for (int j = 0; j < ny; ++j) {
        double ky = dim == 2 ? wavenumber(j, ny, g.ly()) : 0.0;
        bool ny_q = dim == 2 && nyquist(j, ny);
        for (int i = 0; i < nkx; ++i) {
            double kx = wavenumber(i, nx, g.lx());
            double k2 = kx * kx + ky * ky;
            std::size_t id = std::size_t(j) * nkx + i;
            if (k2 == 0.0 || nyquist(i, nx) || ny_q) {
                for (int c = 0; c < dim; ++c) spec[c][id] = 0.0;
                continue;
            }
            cplx dot = kx * spec[0][id] + (dim == 2 ? ky * spec[1][id] : cplx(0.0));
            spec[0][id] = kx * dot / k2;
            if (dim == 2) spec[1][id] = ky * dot / k2;
        }
    }
    VectorField q(g);
    for (int c = 0; c < dim; ++c) tf::fft_inverse(nx, ny, spec[c].data(), q.data(c));
    return q;
}

}  // namespace

PoissonContext::PoissonContext(const Grid& grid) : grid_(&grid) {
    if (!grid.periodic() && grid.nx() < 8)
        throw std::invalid_argument("poisson: bounded grid too small");
}

ScalarField PoissonContext::inv_laplacian(const ScalarField& g) const {
    require_same_grid(*grid_, g.grid(), "inv_laplacian");
    return grid_->periodic() ? periodic_inv_laplacian(*grid_, g)
                             : bounded_inv_laplacian(*grid_, g);
}

VectorField PoissonContext::project_Q(const VectorField& v) const {
    require_same_grid(*grid_, v.grid(), "project_Q");
    return grid_->periodic() ? periodic_project_Q(*grid_, v) : bounded_project_Q(*grid_, v);
}

VectorField PoissonContext::project_P(const VectorField& v) const {
    VectorField q = project_Q(v);
    VectorField p = v;
    p -= q;
    return p;
}

ScalarField PoissonContext::compatible_divergence(const VectorField& v) const {
    require_same_grid(*grid_, v.grid(), "compatible_divergence");
    if (grid_->periodic()) return div(v);
    return bounded_compatible_div(*grid_, v);
}

}  // namespace nemlab
