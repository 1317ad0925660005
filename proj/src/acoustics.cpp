#include "nemlab/acoustics.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "nemlab/calculus.hpp"
#include "nemlab/detail/expint.hpp"
#include "nemlab/transforms.hpp"

namespace nemlab {
namespace {

using cplx = std::complex<double>;

inline double wavenumber(int idx, int n, double L) {
    int k = idx <= n / 2 ? idx : idx - n;
    return 2.0 * M_PI * k / L;
}

inline bool nyquist(int idx, int n) { return n % 2 == 0 && idx == n / 2; }

struct ModeView {
    // spectra of (phi, m) with r2c layout
    std::vector<cplx> phi;
    std::vector<std::vector<cplx>> m;
};

ModeView to_modes(const AcousticVec& v) {
    const Grid& g = v.grid();
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int nkx = nx / 2 + 1;
    ModeView mv;
    mv.phi.resize(std::size_t(ny) * nkx);
    tf::fft_forward(nx, ny, v.phi.data(), mv.phi.data());
    mv.m.resize(g.dim());
    for (int c = 0; c < g.dim(); ++c) {
        mv.m[c].resize(mv.phi.size());
        tf::fft_forward(nx, ny, v.m.data(c), mv.m[c].data());
    }
    return mv;
}

AcousticVec from_modes(const Grid& g, const ModeView& mv) {
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    AcousticVec v(g);
    tf::fft_inverse(nx, ny, mv.phi.data(), v.phi.data());
    for (int c = 0; c < g.dim(); ++c) tf::fft_inverse(nx, ny, mv.m[c].data(), v.m.data(c));
    return v;
}

// Rotate one mode by the exact flow of phi' = -i k.m, m' = -i B k phi over
// time t; the transverse part of m is frozen.
void evolve_mode(cplx& phi, cplx* m, int dim, double kx, double ky, double B, double t) {
    double kn = std::sqrt(kx * kx + ky * ky);
    if (kn == 0.0) return;
    double ex = kx / kn, ey = ky / kn;
    cplx mpar = ex * m[0] + (dim == 2 ? ey * m[1] : cplx(0.0));
    double omega = std::sqrt(B) * kn;
    double cs = std::cos(omega * t), sn = std::sin(omega * t);
    cplx phi_new = cs * phi - cplx(0.0, 1.0) / std::sqrt(B) * sn * mpar;
    cplx mpar_new = -cplx(0.0, 1.0) * std::sqrt(B) * sn * phi + cs * mpar;
    phi = phi_new;
    m[0] += (mpar_new - mpar) * ex;
    if (dim == 2) m[1] += (mpar_new - mpar) * ey;
}

}  // namespace

double acoustic_energy(const AcousticVec& v, double B) {
    double np = l2_norm(v.phi);
    double nm = l2_norm(v.m);
    return B * np * np + nm * nm;
}

AcousticVec apply_A(const AcousticVec& v, double B) {
    if (B <= 0.0) throw std::invalid_argument("apply_A: B must be > 0");
    AcousticVec out(v.grid());
    out.phi = div(v.m);
    out.m = grad(v.phi);
    out.m *= B;
    return out;
}

AcousticVec semigroup_L(double t, const AcousticVec& v0, double B) {
    const Grid& g = v0.grid();
    if (!g.periodic())
        throw std::invalid_argument("semigroup_L: bounded grids unsupported; use the mode expansion");
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int nkx = nx / 2 + 1;
    ModeView mv = to_modes(v0);
    for (int j = 0; j < ny; ++j) {
        double ky = g.dim() == 2 ? wavenumber(j, ny, g.ly()) : 0.0;
        bool nyq_y = g.dim() == 2 && nyquist(j, ny);
        for (int i = 0; i < nkx; ++i) {
            if (nyquist(i, nx) || nyq_y) continue;  // no consistent odd derivative: frozen
            double kx = wavenumber(i, nx, g.lx());
            std::size_t id = std::size_t(j) * nkx + i;
            cplx mloc[2] = {mv.m[0][id], g.dim() == 2 ? mv.m[1][id] : cplx(0.0)};
            evolve_mode(mv.phi[id], mloc, g.dim(), kx, ky, B, t);
            mv.m[0][id] = mloc[0];
            if (g.dim() == 2) mv.m[1][id] = mloc[1];
        }
    }
    return from_modes(g, mv);
}

AcousticVec duhamel_solve(const AcousticVec& v0, const AcousticForcing& forcing, double t,
                          double eps, double B) {
    const Grid& g = v0.grid();
    if (!g.periodic()) throw std::invalid_argument("duhamel_solve: periodic grids only");
    if (t < 0.0) throw std::invalid_argument("duhamel_solve: t must be >= 0");
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int nkx = nx / 2 + 1;
    const int dim = g.dim();

    if (!forcing.samples.empty() &&
        (forcing.dt <= 0.0 || t > forcing.dt * double(forcing.samples.size() - 1) + 1e-12))
        throw std::invalid_argument("duhamel_solve: forcing samples do not cover [0, t]");

    // semigroup part
    ModeView acc = to_modes(v0);
    std::vector<ModeView> fmodes;
    fmodes.reserve(forcing.samples.size());
    for (const auto& s : forcing.samples) {
        require_same_grid(g, s.grid(), "duhamel_solve");
        fmodes.push_back(to_modes(s));
    }

    const double sqB = std::sqrt(B);
    for (int j = 0; j < ny; ++j) {
        double ky = dim == 2 ? wavenumber(j, ny, g.ly()) : 0.0;
        bool nyq_y = dim == 2 && nyquist(j, ny);
        for (int i = 0; i < nkx; ++i) {
            std::size_t id = std::size_t(j) * nkx + i;
            double kx = wavenumber(i, nx, g.lx());
            bool frozen = nyquist(i, nx) || nyq_y;
            double kn = std::sqrt(kx * kx + ky * ky);

            cplx phi = acc.phi[id];
            cplx m[2] = {acc.m[0][id], dim == 2 ? acc.m[1][id] : cplx(0.0)};

            if (frozen || kn == 0.0) {
                // A vanishes: phi(t) = phi0 + int g_phi, m likewise (trapezoid)
                if (!fmodes.empty()) {
                    double s = 0.0;
                    std::size_t seg = 0;
                    while (s < t - 1e-15) {
                        double h = std::min(forcing.dt, t - s);
                        double w = h / forcing.dt;
                        cplx p0 = fmodes[seg].phi[id];
                        cplx p1 = fmodes[seg + 1].phi[id];
                        phi += 0.5 * h * (p0 + (1.0 - w) * p0 + w * p1);
                        for (int c = 0; c < dim; ++c) {
                            cplx q0 = fmodes[seg].m[c][id];
                            cplx q1 = fmodes[seg + 1].m[c][id];
                            m[c] += 0.5 * h * (q0 + (1.0 - w) * q0 + w * q1);
                        }
                        s += h;
                        ++seg;
                    }
                }
            } else {
                double ex = kx / kn, ey = ky / kn;
                double omega = sqB * kn;
                // characteristic variables a+- = (phi +- mpar/sqrt(B))/2 with
                // eigenvalues -+ i omega / eps of the homogeneous evolution
                cplx mpar = ex * m[0] + (dim == 2 ? ey * m[1] : cplx(0.0));
                cplx mperp[2] = {m[0] - mpar * ex, dim == 2 ? m[1] - mpar * ey : cplx(0.0)};
                cplx ap = 0.5 * (phi + mpar / sqB);
                cplx am = 0.5 * (phi - mpar / sqB);
                const cplx zp = cplx(0.0, -omega / eps);
                const cplx zm = cplx(0.0, +omega / eps);

                if (fmodes.empty()) {
                    ap *= std::exp(zp * t);
                    am *= std::exp(zm * t);
                } else {
                    double s = 0.0;
                    std::size_t seg = 0;
                    while (s < t - 1e-15) {
                        double h = std::min(forcing.dt, t - s);
                        auto hval = [&](const ModeView& f) {
                            cplx gphi = f.phi[id];
                            cplx gpar = ex * f.m[0][id] + (dim == 2 ? ey * f.m[1][id] : cplx(0.0));
                            return std::pair<cplx, cplx>{0.5 * (gphi + gpar / sqB),
                                                         0.5 * (gphi - gpar / sqB)};
                        };
                        auto [hp0, hm0] = hval(fmodes[seg]);
                        auto [hp1, hm1] = hval(fmodes[seg + 1]);
                        double w = h / forcing.dt;  // partial interval: interpolate end
                        cplx hp_end = hp0 + (hp1 - hp0) * w;
                        cplx hm_end = hm0 + (hm1 - hm0) * w;
                        ap = detail::exp_step(ap, zp, h, hp0, hp_end);
                        am = detail::exp_step(am, zm, h, hm0, hm_end);
                        // transverse momentum just integrates the forcing
                        cplx g0[2] = {fmodes[seg].m[0][id],
                                      dim == 2 ? fmodes[seg].m[1][id] : cplx(0.0)};
                        cplx g1[2] = {g0[0] + (fmodes[seg + 1].m[0][id] - g0[0]) * w,
                                      dim == 2 ? g0[1] + (fmodes[seg + 1].m[1][id] - g0[1]) * w
                                               : cplx(0.0)};
                        cplx gpar0 = ex * g0[0] + ey * g0[1];
                        cplx gpar1 = ex * g1[0] + ey * g1[1];
                        mperp[0] += 0.5 * h * ((g0[0] - gpar0 * ex) + (g1[0] - gpar1 * ex));
                        if (dim == 2)
                            mperp[1] += 0.5 * h * ((g0[1] - gpar0 * ey) + (g1[1] - gpar1 * ey));
                        s += h;
                        ++seg;
                    }
                }
                phi = ap + am;
                mpar = sqB * (ap - am);
                m[0] = mperp[0] + mpar * ex;
                if (dim == 2) m[1] = mperp[1] + mpar * ey;
            }
            acc.phi[id] = phi;
            acc.m[0][id] = m[0];
            if (dim == 2) acc.m[1][id] = m[1];
        }
    }
    return from_modes(g, acc);
}

ScalarField mollify(const ScalarField& gfield, double delta) {
    const Grid& g = gfield.grid();
    if (!g.periodic()) throw std::invalid_argument("mollify: periodic grids only");
    double hmax = std::max(g.hx(), g.dim() == 2 ? g.hy() : 0.0);
    if (delta < 2.0 * hmax)
        throw std::invalid_argument("mollify: delta below 2 grid spacings (resolution error)");

    // grid-sampled bump, wrapped; discrete unit mass
    ScalarField kernel(g);
    double sum = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            double dx = g.x(i);
            if (dx > 0.5 * g.lx()) dx -= g.lx();
            double dy = 0.0;
            if (g.dim() == 2) {
                dy = g.y(j);
                if (dy > 0.5 * g.ly()) dy -= g.ly();
            }
            double r2 = (dx * dx + dy * dy) / (delta * delta);
            double val = r2 < 1.0 ? std::exp(-1.0 / (1.0 - r2)) : 0.0;
            kernel(i, j) = val;
            sum += val;
        }
    }
    double cell = g.hx() * (g.dim() == 2 ? g.hy() : 1.0);
    double norm = 1.0 / (sum * cell);
    kernel *= norm;

    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int nkx = nx / 2 + 1;
    std::vector<cplx> fg(std::size_t(ny) * nkx), fk(fg.size());
    tf::fft_forward(nx, ny, gfield.data(), fg.data());
    tf::fft_forward(nx, ny, kernel.data(), fk.data());
    for (std::size_t k = 0; k < fg.size(); ++k) fg[k] *= fk[k] * cell;
    ScalarField out(g);
    tf::fft_inverse(nx, ny, fg.data(), out.data());
    return out;
}

SlopeFit mollifier_rates(const ScalarField& g, double p, const std::vector<double>& deltas) {
    std::vector<double> err;
    err.reserve(deltas.size());
    for (double d : deltas) {
        ScalarField m = mollify(g, d);
        ScalarField diff = g;
        diff -= m;
        err.push_back(p == 2.0 ? l2_norm(diff) : lp_norm(diff, p));
    }
    return fit_loglog(deltas, err);
}

}  // namespace nemlab
