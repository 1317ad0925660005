#include "nemlab/calculus.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "nemlab/transforms.hpp"

namespace nemlab {
namespace {

using cplx = std::complex<double>;

// Signed wavenumber for r2c/full index conventions.
inline double wavenumber(int idx, int n, double L) {
    int k = idx <= n / 2 ? idx : idx - n;
    return 2.0 * M_PI * k / L;
}

// Spectral partial derivative along `axis`; Nyquist mode zeroed.
void spectral_derivative(const Grid& g, const double* in, double* out, int axis) {
    const int nx = g.nx(), ny = g.ny();
    const int nkx = nx / 2 + 1;
    std::vector<cplx> spec(std::size_t(ny) * nkx);
    tf::fft_forward(nx, ny, in, spec.data());
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nkx; ++i) {
            double k = axis == 0 ? wavenumber(i, nx, g.lx()) : wavenumber(j, ny, g.ly());
            bool nyquist = axis == 0 ? (nx % 2 == 0 && i == nx / 2)
                                     : (ny % 2 == 0 && j == ny / 2);
            cplx& c = spec[std::size_t(j) * nkx + i];
            c = nyquist ? cplx(0.0, 0.0) : cplx(0.0, k) * c;
        }
    }
    tf::fft_inverse(nx, ny, spec.data(), out);
}

void spectral_laplacian(const Grid& g, const double* in, double* out) {
    const int nx = g.nx(), ny = g.ny();
    const int nkx = nx / 2 + 1;
    std::vector<cplx> spec(std::size_t(ny) * nkx);
    tf::fft_forward(nx, ny, in, spec.data());
    for (int j = 0; j < ny; ++j) {
        double ky = g.dim() == 2 ? wavenumber(j, ny, g.ly()) : 0.0;
        for (int i = 0; i < nkx; ++i) {
            double kx = wavenumber(i, nx, g.lx());
            spec[std::size_t(j) * nkx + i] *= -(kx * kx + ky * ky);
        }
    }
    tf::fft_inverse(nx, ny, spec.data(), out);
}

// Centered 2nd-order first derivative, one-sided at the boundary.
void fd_derivative(const Grid& g, const double* in, double* out, int axis) {
    const int nx = g.nx(), ny = g.ny();
    const double h = g.h(axis);
    auto at = [&](int i, int j) { return in[g.idx(i, j)]; };
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            double d;
            int q = axis == 0 ? i : j;
            int n = axis == 0 ? nx : ny;
            auto val = [&](int s) { return axis == 0 ? at(s, j) : at(i, s); };
            if (q == 0)
                d = (-3.0 * val(0) + 4.0 * val(1) - val(2)) / (2.0 * h);
            else if (q == n - 1)
                d = (3.0 * val(n - 1) - 4.0 * val(n - 2) + val(n - 3)) / (2.0 * h);
            else
                d = (val(q + 1) - val(q - 1)) / (2.0 * h);
            out[g.idx(i, j)] = d;
        }
    }
}

// Centered 2nd-order second derivative, one-sided 4-point at the boundary.
void fd_second_derivative(const Grid& g, const double* in, double* out, int axis) {
    const int nx = g.nx(), ny = g.ny();
    const double h2 = g.h(axis) * g.h(axis);
    auto at = [&](int i, int j) { return in[g.idx(i, j)]; };
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            double d;
            int q = axis == 0 ? i : j;
            int n = axis == 0 ? nx : ny;
            auto val = [&](int s) { return axis == 0 ? at(s, j) : at(i, s); };
            if (q == 0)
                d = (2.0 * val(0) - 5.0 * val(1) + 4.0 * val(2) - val(3)) / h2;
            else if (q == n - 1)
                d = (2.0 * val(n - 1) - 5.0 * val(n - 2) + 4.0 * val(n - 3) - val(n - 4)) / h2;
            else
                d = (val(q + 1) - 2.0 * val(q) + val(q - 1)) / h2;
            out[g.idx(i, j)] = d;
        }
    }
}

void derivative_raw(const Grid& g, const double* in, double* out, int axis) {
    if (g.periodic())
        spectral_derivative(g, in, out, axis);
    else
        fd_derivative(g, in, out, axis);
}

void laplacian_raw(const Grid& g, const double* in, double* out) {
    if (g.periodic()) {
        spectral_laplacian(g, in, out);
        return;
    }
    std::vector<double> tmp(g.size());
    fd_second_derivative(g, in, out, 0);
    if (g.dim() == 2) {
        fd_second_derivative(g, in, tmp.data(), 1);
        for (std::size_t k = 0; k < g.size(); ++k) out[k] += tmp[k];
    }
}

}  // namespace

void derivative(const ScalarField& f, int axis, ScalarField& out) {
    require_same_grid(f.grid(), out.grid(), "derivative");
    derivative_raw(f.grid(), f.data(), out.data(), axis);
}

VectorField grad(const ScalarField& f) {
    const Grid& g = f.grid();
    VectorField out(g);
    for (int a = 0; a < g.dim(); ++a) derivative_raw(g, f.data(), out.data(a), a);
    return out;
}

ScalarField div(const VectorField& v) {
    const Grid& g = v.grid();
    ScalarField out(g);
    std::vector<double> tmp(g.size());
    for (int a = 0; a < g.dim(); ++a) {
        derivative_raw(g, v.data(a), tmp.data(), a);
        for (std::size_t k = 0; k < g.size(); ++k) out.data()[k] += tmp[k];
    }
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    ScalarField out(f.grid());
    laplacian_raw(f.grid(), f.data(), out.data());
    return out;
}

VectorField vector_laplacian(const VectorField& v) {
    const Grid& g = v.grid();
    VectorField out(g);
    for (int c = 0; c < g.dim(); ++c) laplacian_raw(g, v.data(c), out.data(c));
    return out;
}

TensorField vorticity_tensor(const VectorField& u) {
    const Grid& g = u.grid();
    TensorField out(g);
    if (g.dim() == 1) return out;  // skew part of a 1x1 Jacobian is zero
    std::vector<double> dxu1(g.size()), dyu0(g.size());
    derivative_raw(g, u.data(0), dyu0.data(), 1);
    derivative_raw(g, u.data(1), dxu1.data(), 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
        double w = 0.5 * (dyu0[k] - dxu1[k]);  // Omega_01 = (d_y u_0 - d_x u_1)/2
        out.data(0, 1)[k] = w;
        out.data(1, 0)[k] = -w;
    }
    return out;
}

ScalarField director_potential(const VectorField& d, const Params& p) {
    const Grid& g = d.grid();
    ScalarField out(g);
    const double c = 1.0 / (2.0 * p.zeta * p.zeta);
    for (std::size_t k = 0; k < g.size(); ++k) {
        double n2 = 0.0;
        for (int c2 = 0; c2 < g.dim(); ++c2) n2 += d.data(c2)[k] * d.data(c2)[k];
        double dev = n2 - 1.0;
        out.data()[k] = c * dev * dev;
    }
    return out;
}

VectorField director_force(const VectorField& d, const Params& p) {
    const Grid& g = d.grid();
    VectorField out(g);
    const double c = 2.0 / (p.zeta * p.zeta);
    for (std::size_t k = 0; k < g.size(); ++k) {
        double n2 = 0.0;
        for (int c2 = 0; c2 < g.dim(); ++c2) n2 += d.data(c2)[k] * d.data(c2)[k];
        double f = c * (n2 - 1.0);
        for (int c2 = 0; c2 < g.dim(); ++c2) out.data(c2)[k] = f * d.data(c2)[k];
    }
    return out;
}

TensorField ericksen_stress(const VectorField& d, const VectorField& N, const Params& p) {
    const Grid& g = d.grid();
    require_same_grid(g, N.grid(), "ericksen_stress");
    const int dim = g.dim();
    TensorField out(g);

    // grad of each director component: dd[m][axis]
    std::vector<std::vector<std::vector<double>>> dd(
        dim, std::vector<std::vector<double>>(dim, std::vector<double>(g.size())));
    for (int m = 0; m < dim; ++m)
        for (int a = 0; a < dim; ++a) derivative_raw(g, d.data(m), dd[m][a].data(), a);

    ScalarField F = director_potential(d, p);
    const double rot = 1.0 / (2.0 * p.lambda);

    for (std::size_t k = 0; k < g.size(); ++k) {
        double grad2 = 0.0;
        for (int m = 0; m < dim; ++m)
            for (int a = 0; a < dim; ++a) grad2 += dd[m][a][k] * dd[m][a][k];
        double iso = F.data()[k] + 0.5 * grad2;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                double odot = 0.0;
                for (int m = 0; m < dim; ++m) odot += dd[m][i][k] * dd[m][j][k];
                double skew = rot * (d.data(i)[k] * N.data(j)[k] - N.data(i)[k] * d.data(j)[k]);
                out.data(i, j)[k] = (i == j ? iso : 0.0) - odot + skew;
            }
        }
    }
    return out;
}

VectorField tensor_divergence(const TensorField& T) {
    const Grid& g = T.grid();
    VectorField out(g);
    std::vector<double> tmp(g.size());
    for (int i = 0; i < g.dim(); ++i) {
        for (int j = 0; j < g.dim(); ++j) {
            derivative_raw(g, T.data(i, j), tmp.data(), j);
            for (std::size_t k = 0; k < g.size(); ++k) out.data(i)[k] += tmp[k];
        }
    }
    return out;
}

ScalarField advective_derivative(const VectorField& u, const ScalarField& f) {
    const Grid& g = f.grid();
    ScalarField out(g);
    std::vector<double> tmp(g.size());
    for (int a = 0; a < g.dim(); ++a) {
        derivative_raw(g, f.data(), tmp.data(), a);
        for (std::size_t k = 0; k < g.size(); ++k) out.data()[k] += u.data(a)[k] * tmp[k];
    }
    return out;
}

VectorField advective_derivative(const VectorField& u, const VectorField& w) {
    const Grid& g = w.grid();
    VectorField out(g);
    std::vector<double> tmp(g.size());
    for (int c = 0; c < g.dim(); ++c) {
        for (int a = 0; a < g.dim(); ++a) {
            derivative_raw(g, w.data(c), tmp.data(), a);
            for (std::size_t k = 0; k < g.size(); ++k) out.data(c)[k] += u.data(a)[k] * tmp[k];
        }
    }
    return out;
}

VectorField momentum_flux_divergence(const VectorField& m, const VectorField& u) {
    const Grid& g = m.grid();
    require_same_grid(g, u.grid(), "momentum_flux_divergence");
    TensorField flux(g);
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            for (std::size_t k = 0; k < g.size(); ++k)
                flux.data(i, j)[k] = m.data(i)[k] * u.data(j)[k];
    return tensor_divergence(flux);
}

}  // namespace nemlab
