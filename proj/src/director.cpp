#include "nemlab/director.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "nemlab/calculus.hpp"
#include "nemlab/transforms.hpp"

namespace nemlab {
namespace {

using cplx = std::complex<double>;

// Bilinear (linear in 1D) interpolation; periodic wrap or clamp to the box.
double interp(const Grid& g, const double* f, double px, double py) {
    auto wrap = [](double s, int n) {
        double t = std::fmod(s, double(n));
        return t < 0.0 ? t + n : t;
    };
    double sx = px / g.hx();
    if (g.periodic()) sx = wrap(sx, g.nx());
    else sx = std::clamp(sx, 0.0, double(g.nx() - 1));
    int i0 = int(sx);
    if (i0 > g.nx() - 1) i0 = g.nx() - 1;
    int i1 = g.periodic() ? (i0 + 1) % g.nx() : std::min(i0 + 1, g.nx() - 1);
    double ax = sx - i0;

    if (g.dim() == 1) return (1.0 - ax) * f[g.idx(i0, 0)] + ax * f[g.idx(i1, 0)];

    double sy = py / g.hy();
    if (g.periodic()) sy = wrap(sy, g.ny());
    else sy = std::clamp(sy, 0.0, double(g.ny() - 1));
    int j0 = int(sy);
    if (j0 > g.ny() - 1) j0 = g.ny() - 1;
    int j1 = g.periodic() ? (j0 + 1) % g.ny() : std::min(j0 + 1, g.ny() - 1);
    double ay = sy - j0;

    return (1.0 - ax) * (1.0 - ay) * f[g.idx(i0, j0)] + ax * (1.0 - ay) * f[g.idx(i1, j0)] +
           (1.0 - ax) * ay * f[g.idx(i0, j1)] + ax * ay * f[g.idx(i1, j1)];
}

inline bool on_boundary(const Grid& g, int i, int j) {
    if (g.periodic()) return false;
    if (i == 0 || i == g.nx() - 1) return true;
    return g.dim() == 2 && (j == 0 || j == g.ny() - 1);
}

void periodic_stencil_invert(const Grid& g, double coef, const double* rhs, double* out) {
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int nkx = nx / 2 + 1;
    std::vector<cplx> spec(std::size_t(ny) * nkx);
    tf::fft_forward(nx, ny, rhs, spec.data());
    for (int j = 0; j < ny; ++j) {
        double sy = 0.0;
        if (g.dim() == 2) {
            double s = std::sin(M_PI * j / ny);
            sy = 4.0 * s * s / (g.hy() * g.hy());
        }
        for (int i = 0; i < nkx; ++i) {
            double s = std::sin(M_PI * i / nx);
            double sx = 4.0 * s * s / (g.hx() * g.hx());
            spec[std::size_t(j) * nkx + i] /= (1.0 + coef * (sx + sy));
        }
    }
    tf::fft_inverse(nx, ny, spec.data(), out);
}

void dirichlet_stencil_invert(const Grid& g, double coef, const double* rhs,
                              const double* boundary, double* out) {
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int mx = nx - 2, my = g.dim() == 2 ? ny - 2 : 1;
    const double ihx2 = 1.0 / (g.hx() * g.hx());
    const double ihy2 = g.dim() == 2 ? 1.0 / (g.hy() * g.hy()) : 0.0;

    // interior right side with boundary neighbors folded in
    std::vector<double> r(std::size_t(mx) * my);
    for (int j = 0; j < my; ++j) {
        int jj = g.dim() == 2 ? j + 1 : 0;
        for (int i = 0; i < mx; ++i) {
            int ii = i + 1;
            double v = rhs[g.idx(ii, jj)];
            if (ii == 1) v += coef * ihx2 * boundary[g.idx(0, jj)];
            if (ii == nx - 2) v += coef * ihx2 * boundary[g.idx(nx - 1, jj)];
            if (g.dim() == 2 && jj == 1) v += coef * ihy2 * boundary[g.idx(ii, 0)];
            if (g.dim() == 2 && jj == ny - 2) v += coef * ihy2 * boundary[g.idx(ii, ny - 1)];
            r[std::size_t(j) * mx + i] = v;
        }
    }
    std::vector<double> spec(r.size());
    tf::r2r_2d(tf::R2R::DST1, tf::R2R::DST1, mx, g.dim() == 2 ? my : 1, r.data(), spec.data());
    const int Nx = nx - 1, Ny = ny - 1;
    for (int j = 0; j < my; ++j) {
        double sy = 0.0;
        if (g.dim() == 2) {
            double s = std::sin(0.5 * M_PI * (j + 1) / Ny);
            sy = 4.0 * s * s * ihy2;
        }
        for (int i = 0; i < mx; ++i) {
            double s = std::sin(0.5 * M_PI * (i + 1) / Nx);
            double sx = 4.0 * s * s * ihx2;
            spec[std::size_t(j) * mx + i] /= (1.0 + coef * (sx + sy));
        }
    }
    std::vector<double> sol(r.size());
    tf::r2r_2d(tf::R2R::DST1, tf::R2R::DST1, mx, g.dim() == 2 ? my : 1, spec.data(), sol.data());
    double scale = 1.0 / tf::logical_size(tf::R2R::DST1, mx);
    if (g.dim() == 2) scale /= tf::logical_size(tf::R2R::DST1, my);

    for (std::size_t k = 0; k < g.size(); ++k) out[k] = boundary[k];
    for (int j = 0; j < my; ++j) {
        int jj = g.dim() == 2 ? j + 1 : 0;
        for (int i = 0; i < mx; ++i)
            out[g.idx(i + 1, jj)] = sol[std::size_t(j) * mx + i] * scale;
    }
}

}  // namespace

void helmholtz_invert_stencil(const Grid& g, double coef, const double* rhs,
                              const double* boundary, double* out) {
    if (g.periodic())
        periodic_stencil_invert(g, coef, rhs, out);
    else
        dirichlet_stencil_invert(g, coef, rhs, boundary, out);
}

void laplacian_stencil(const Grid& g, const double* in, double* out) {
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const double ihx2 = 1.0 / (g.hx() * g.hx());
    const double ihy2 = g.dim() == 2 ? 1.0 / (g.hy() * g.hy()) : 0.0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            if (on_boundary(g, i, j)) {
                out[g.idx(i, j)] = 0.0;  // unused on Dirichlet rows
                continue;
            }
            int im = g.periodic() ? (i + nx - 1) % nx : i - 1;
            int ip = g.periodic() ? (i + 1) % nx : i + 1;
            double v = (in[g.idx(im, j)] - 2.0 * in[g.idx(i, j)] + in[g.idx(ip, j)]) * ihx2;
            if (g.dim() == 2) {
                int jm = g.periodic() ? (j + ny - 1) % ny : j - 1;
                int jp = g.periodic() ? (j + 1) % ny : j + 1;
                v += (in[g.idx(i, jm)] - 2.0 * in[g.idx(i, j)] + in[g.idx(i, jp)]) * ihy2;
            }
            out[g.idx(i, j)] = v;
        }
    }
}

VectorField advance_director(VectorField& d, const VectorField& u, const Params& p,
                             double dt, int substeps) {
    const Grid& g = d.grid();
    const int dim = g.dim();

    // 1. transport: d_a(x) = d^n(x - dt u(x)); boundary rows pinned
    VectorField da(g);
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            if (on_boundary(g, i, j)) {
                for (int c = 0; c < dim; ++c) da(c, i, j) = d(c, i, j);
                continue;
            }
            double px = g.x(i) - dt * u(0, i, j);
            double py = dim == 2 ? g.y(j) - dt * u(1, i, j) : 0.0;
            for (int c = 0; c < dim; ++c) da(c, i, j) = interp(g, d.data(c), px, py);
        }
    }

    // 2. rotation: d_b = exp(dt Omega) d_a, exact per point (2D only)
    VectorField db = da;
    if (dim == 2) {
        TensorField Om = vorticity_tensor(u);
        for (int j = 0; j < g.ny(); ++j) {
            for (int i = 0; i < g.nx(); ++i) {
                if (on_boundary(g, i, j)) continue;
                double w = Om(0, 1, i, j);
                double phi = dt * w, cs = std::cos(phi), sn = std::sin(phi);
                double d0 = da(0, i, j), d1 = da(1, i, j);
                db(0, i, j) = cs * d0 + sn * d1;
                db(1, i, j) = -sn * d0 + cs * d1;
            }
        }
    }

    // 3. relaxation force, substepped so each map keeps |d| <= 1
    int ns = std::max(substeps, int(std::ceil(dt / (0.9 * p.zeta * p.zeta / (4.0 * p.lambda)))));
    VectorField dc = db;
    const double dts = dt / ns;
    for (int s = 0; s < ns; ++s) {
        for (int j = 0; j < g.ny(); ++j) {
            for (int i = 0; i < g.nx(); ++i) {
                if (on_boundary(g, i, j)) continue;
                double n2 = 0.0;
                for (int c = 0; c < dim; ++c) n2 += dc(c, i, j) * dc(c, i, j);
                double f = dts * p.lambda * 2.0 / (p.zeta * p.zeta) * (n2 - 1.0);
                for (int c = 0; c < dim; ++c) dc(c, i, j) -= f * dc(c, i, j);
            }
        }
    }

    // 4. implicit diffusion with the averaging stencil inverse
    VectorField dn(g);
    for (int c = 0; c < dim; ++c)
        helmholtz_invert_stencil(g, dt * p.lambda, dc.data(c), d.data(c), dn.data(c));

    VectorField N(g);
    for (int c = 0; c < dim; ++c)
        for (std::size_t k = 0; k < g.size(); ++k)
            N.data(c)[k] = (dn.data(c)[k] - db.data(c)[k]) / dt;

    d = dn;
    return N;
}

}  // namespace nemlab
