#include "nemlab/compressible.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <vector>

#include "nemlab/calculus.hpp"
#include "nemlab/director.hpp"
#include "nemlab/transforms.hpp"

namespace nemlab {
namespace {

using cplx = std::complex<double>;

inline double wavenumber(int idx, int n, double L) {
    int k = idx <= n / 2 ? idx : idx - n;
    return 2.0 * M_PI * k / L;
}

inline bool nyquist(int idx, int n) { return n % 2 == 0 && idx == n / 2; }

// Conservative centered divergence with odd-reflection closures:
// (Dv)_0 = v_1/h, (Dv)_N = -v_{N-1}/h on bounded axes. Its trapezoidal
// integral vanishes exactly for fields with zero wall-normal component, which
// keeps the discrete mass constant.
ScalarField conservative_div(const VectorField& v) {
    const Grid& g = v.grid();
    ScalarField out(g);
    for (int axis = 0; axis < g.dim(); ++axis) {
        const double ih2 = 1.0 / (2.0 * g.h(axis));
        const int n = g.n(axis);
        for (int j = 0; j < g.ny(); ++j) {
            for (int i = 0; i < g.nx(); ++i) {
                int q = axis == 0 ? i : j;
                auto val = [&](int s) { return axis == 0 ? v(axis, s, j) : v(axis, i, s); };
                double d;
                if (g.periodic()) {
                    d = (val((q + 1) % n) - val((q + n - 1) % n)) * ih2;
                } else if (q == 0) {
                    d = 2.0 * val(1) * ih2;
                } else if (q == n - 1) {
                    d = -2.0 * val(n - 2) * ih2;
                } else {
                    d = (val(q + 1) - val(q - 1)) * ih2;
                }
                out(i, j) += d;
            }
        }
    }
    return out;
}

// grad of a DCT-represented scalar, synthesized in the sine basis so the
// wall-normal component vanishes identically. Used for the acoustic pressure
// correction on bounded grids.
VectorField neumann_spectral_grad(const Grid& g, const ScalarField& f) {
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int Nx = nx - 1, Ny = ny - 1;
    std::vector<double> spec(g.size());
    tf::r2r_2d(tf::R2R::DCT1, tf::R2R::DCT1, nx, g.dim() == 2 ? ny : 1, f.data(), spec.data());
    // function coefficients chat = raw * w/(2Nx 2Ny) structure
    auto cw = [](int k, int N) { return (k == 0 || k == N) ? 1.0 : 0.5; };
    std::vector<double> chat(spec.size());
    double inv = 1.0 / (tf::logical_size(tf::R2R::DCT1, nx) *
                        (g.dim() == 2 ? tf::logical_size(tf::R2R::DCT1, ny) : 1.0));
    for (int l = 0; l < ny; ++l)
        for (int k = 0; k < nx; ++k)
            chat[std::size_t(l) * nx + k] = spec[std::size_t(l) * nx + k] * inv /
                                            (cw(k, Nx) * (g.dim() == 2 ? cw(l, Ny) : 1.0)) *
                                            (g.dim() == 2 ? 1.0 : 1.0);
    VectorField out(g);
    // d/dx: coefficients -kappa_x * chat in sin_x (x) cos_y
    {
        const int mx = nx - 2;
        std::vector<double> b(std::size_t(mx) * ny, 0.0);
        for (int l = 0; l < ny; ++l)
            for (int k = 1; k <= Nx - 1; ++k)
                b[std::size_t(l) * mx + (k - 1)] = -(M_PI * k / g.lx()) * chat[std::size_t(l) * nx + k];
        // synthesize: raw DST doubles sine coefficients; cos axis needs w weights
        std::vector<double> coef(b.size());
        for (int l = 0; l < ny; ++l) {
            double wl = (g.dim() == 2 && l != 0 && l != Ny) ? 0.5 : 1.0;
            for (int i = 0; i < mx; ++i) coef[std::size_t(l) * mx + i] = 0.5 * wl * b[std::size_t(l) * mx + i];
        }
        std::vector<double> slab(coef.size());
        tf::r2r_2d(tf::R2R::DST1, tf::R2R::DCT1, mx, g.dim() == 2 ? ny : 1, coef.data(), slab.data());
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < mx; ++i) out(0, i + 1, j) = slab[std::size_t(j) * mx + i];
    }
    if (g.dim() == 2) {
        const int my = ny - 2;
        std::vector<double> b(std::size_t(nx) * my, 0.0);
        for (int l = 1; l <= Ny - 1; ++l)
            for (int k = 0; k < nx; ++k)
                b[std::size_t(l - 1) * nx + k] = -(M_PI * l / g.ly()) * chat[std::size_t(l) * nx + k];
        std::vector<double> coef(b.size());
        for (int j = 0; j < my; ++j)
            for (int k = 0; k < nx; ++k) {
                double wk = (k != 0 && k != Nx) ? 0.5 : 1.0;
                coef[std::size_t(j) * nx + k] = 0.5 * wk * b[std::size_t(j) * nx + k];
            }
        std::vector<double> slab(coef.size());
        tf::r2r_2d(tf::R2R::DCT1, tf::R2R::DST1, nx, my, coef.data(), slab.data());
        for (int j = 0; j < my; ++j)
            for (int i = 0; i < nx; ++i) out(1, i, j + 1) = slab[std::size_t(j) * nx + i];
    }
    return out;
}

// Neumann Helmholtz solve (I - coef*Lap)^{-1} in the DCT basis with the
// compact stencil symbol.
ScalarField neumann_helmholtz_invert(const Grid& g, double coef, const ScalarField& rhs) {
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int Nx = nx - 1, Ny = ny - 1;
    std::vector<double> spec(g.size());
    tf::r2r_2d(tf::R2R::DCT1, tf::R2R::DCT1, nx, g.dim() == 2 ? ny : 1, rhs.data(), spec.data());
    for (int l = 0; l < ny; ++l) {
        double sy = 0.0;
        if (g.dim() == 2) {
            double s = std::sin(0.5 * M_PI * l / Ny);
            sy = 4.0 * s * s / (g.hy() * g.hy());
        }
        for (int k = 0; k < nx; ++k) {
            double s = std::sin(0.5 * M_PI * k / Nx);
            double sx = 4.0 * s * s / (g.hx() * g.hx());
            spec[std::size_t(l) * nx + k] /= (1.0 + coef * (sx + sy));
        }
    }
    ScalarField out(g);
    std::vector<double> res(g.size());
    tf::r2r_2d(tf::R2R::DCT1, tf::R2R::DCT1, nx, g.dim() == 2 ? ny : 1, spec.data(), res.data());
    double scale = 1.0 / tf::logical_size(tf::R2R::DCT1, nx);
    if (g.dim() == 2) scale /= tf::logical_size(tf::R2R::DCT1, ny);
    for (std::size_t k = 0; k < g.size(); ++k) out.data()[k] = res[k] * scale;
    return out;
}

// Dirichlet Helmholtz solve (I/dt - coef*Lap)^{-1} per component, zero walls.
void dirichlet_viscous_solve(const Grid& g, double dt, double coef, const VectorField& rhs,
                             VectorField& out) {
    ScalarField zero(g);
    for (int c = 0; c < g.dim(); ++c) {
        // (I - dt*coef*Lap) u = dt * rhs  with u = 0 on the wall
        std::vector<double> scaled(g.size());
        for (std::size_t k = 0; k < g.size(); ++k) scaled[k] = dt * rhs.data(c)[k];
        helmholtz_invert_stencil(g, dt * coef, scaled.data(), zero.data(), out.data(c));
    }
}

}  // namespace

CompressibleSolver::CompressibleSolver(const Grid& grid, const Params& p, const SchemeConfig& cfg)
    : grid_(&grid), p_(p), cfg_(cfg), poisson_(grid) {
    p_.validate();
    cfg_.validate();
}

void CompressibleSolver::check_admissible(const State& s) const {
    if (!s.finite())
        throw NumericalFailure("compressible solver: non-finite fields at t=" + std::to_string(s.t));
    double mn = s.min_rho();
    if (mn < -1e-12) {
        std::ostringstream os;
        os << "compressible solver: negative density " << mn << " at t=" << s.t
           << " (dt=" << cfg_.dt << "); stability report: reduce dt or check data";
        throw NumericalFailure(os.str());
    }
    double umax = max_abs(s.u);
    double h = std::min(grid_->hx(), grid_->dim() == 2 ? grid_->hy() : grid_->hx());
    if (cfg_.dt > cfg_.dt_bound(h, grid_->dim(), umax, p_) * (1.0 + 1e-9)) {
        std::ostringstream os;
        os << "compressible solver: CFL violated at t=" << s.t << " (dt=" << cfg_.dt
           << " > bound=" << cfg_.dt_bound(h, grid_->dim(), umax, p_) << ", max|u|=" << umax
           << "); stability report: reduce dt";
        throw NumericalFailure(os.str());
    }
}

State CompressibleSolver::step(const State& s) {
    check_admissible(s);
    return grid_->periodic() ? step_periodic(s) : step_bounded(s);
}

State CompressibleSolver::step_periodic(const State& s) {
    const Grid& g = *grid_;
    const double dt = cfg_.dt, th = cfg_.imex_theta;
    const double rho_bar = mean(s.rho);
    const double c2 = p_.sound_speed_sq(rho_bar);
    const double nu = p_.mu / rho_bar;
    const double beta0 = p_.xi / rho_bar;
    const double ie2 = 1.0 / (p_.eps * p_.eps);

    State next(g);
    next.t = s.t + dt;
    next.d = s.d;

    // stage 1: director
    VectorField N = advance_director(next.d, s.u, p_, dt, cfg_.director_substeps);

    // stage 2: momentum/density, m-form
    VectorField m(g);
    for (int c = 0; c < g.dim(); ++c)
        for (std::size_t k = 0; k < g.size(); ++k)
            m.data(c)[k] = s.rho.data()[k] * s.u.data(c)[k];

    VectorField S = tensor_divergence(ericksen_stress(next.d, N, p_));
    S *= p_.alpha;

    VectorField conv = momentum_flux_divergence(m, s.u);
    VectorField lap_u = vector_laplacian(s.u);
    VectorField lap_m = vector_laplacian(m);
    VectorField gdiv_u = grad(div(s.u));
    VectorField gdiv_m = grad(div(m));

    ScalarField pn(g);
    for (std::size_t k = 0; k < g.size(); ++k) pn.data()[k] = p_.pressure(s.rho.data()[k]);
    VectorField grad_pn = grad(pn);

    // right side of the constant-coefficient solve
    VectorField rhs(g);
    for (int c = 0; c < g.dim(); ++c) {
        for (std::size_t k = 0; k < g.size(); ++k) {
            double x = -conv.data(c)[k] + S.data(c)[k] +
                       p_.mu * (lap_u.data(c)[k] - lap_m.data(c)[k] / rho_bar) +
                       p_.xi * (gdiv_u.data(c)[k] - gdiv_m.data(c)[k] / rho_bar);
            rhs.data(c)[k] = m.data(c)[k] / dt + x - ie2 * grad_pn.data(c)[k] +
                             (1.0 - th) * (nu * lap_m.data(c)[k] + beta0 * gdiv_m.data(c)[k]) +
                             th * (1.0 - th) * dt * c2 * ie2 * gdiv_m.data(c)[k];
        }
    }

    // per-mode solve of [(1/dt + th*nu*k^2) I + (th*beta0 + th^2*dt*c2/eps^2) k k^T] m = rhs
    const int nx = g.nx(), ny = g.dim() == 2 ? g.ny() : 1;
    const int nkx = nx / 2 + 1;
    const int dim = g.dim();
    std::vector<std::vector<cplx>> spec(dim, std::vector<cplx>(std::size_t(ny) * nkx));
    for (int c = 0; c < dim; ++c) tf::fft_forward(nx, ny, rhs.data(c), spec[c].data());

    const double b_coef = th * beta0 + th * th * dt * c2 * ie2;
    for (int j = 0; j < ny; ++j) {
        double ky = dim == 2 ? wavenumber(j, ny, g.ly()) : 0.0;
        bool nyq_y = dim == 2 && nyquist(j, ny);
        for (int i = 0; i < nkx; ++i) {
            double kx = wavenumber(i, nx, g.lx());
            double k2 = kx * kx + ky * ky;
            std::size_t id = std::size_t(j) * nkx + i;
            double a = 1.0 / dt + th * nu * k2;
            bool nyq = nyquist(i, nx) || nyq_y;
            if (nyq || k2 == 0.0) {
                for (int c = 0; c < dim; ++c) spec[c][id] /= a;  // k k^T part inactive
                continue;
            }
            cplx dot = kx * spec[0][id] + (dim == 2 ? ky * spec[1][id] : cplx(0.0));
            double denom = a + b_coef * k2;
            spec[0][id] = (spec[0][id] - b_coef * kx * dot / denom) / a;
            if (dim == 2) spec[1][id] = (spec[1][id] - b_coef * ky * dot / denom) / a;
        }
    }
    VectorField m_new(g);
    for (int c = 0; c < dim; ++c) tf::fft_inverse(nx, ny, spec[c].data(), m_new.data(c));

    // mass update with the theta-weighted momentum (spectral div: exact mass)
    VectorField m_theta(g);
    for (int c = 0; c < dim; ++c)
        for (std::size_t k = 0; k < g.size(); ++k)
            m_theta.data(c)[k] = th * m_new.data(c)[k] + (1.0 - th) * m.data(c)[k];
    ScalarField divm = div(m_theta);
    for (std::size_t k = 0; k < g.size(); ++k)
        next.rho.data()[k] = s.rho.data()[k] - dt * divm.data()[k];

    double rho_min = 1e300;
    for (std::size_t k = 0; k < g.size(); ++k) rho_min = std::min(rho_min, next.rho.data()[k]);
    if (rho_min <= 0.0)
        throw NumericalFailure("compressible solver: density hit zero at t=" + std::to_string(next.t));
    for (int c = 0; c < dim; ++c)
        for (std::size_t k = 0; k < g.size(); ++k)
            next.u.data(c)[k] = m_new.data(c)[k] / next.rho.data()[k];

    dissipation_cum_ += dt * dissipation_rate(next.u, N, p_);
    return next;
}

State CompressibleSolver::step_bounded(const State& s) {
    const Grid& g = *grid_;
    const double dt = cfg_.dt, th = cfg_.imex_theta;
    const double rho_bar = mean(s.rho);
    const double c2 = p_.sound_speed_sq(rho_bar);
    const double nu = p_.mu / rho_bar;
    const double ie2 = 1.0 / (p_.eps * p_.eps);
    const int dim = g.dim();

    State next(g);
    next.t = s.t + dt;
    next.d = s.d;

    VectorField N = advance_director(next.d, s.u, p_, dt, cfg_.director_substeps);

    VectorField S = tensor_divergence(ericksen_stress(next.d, N, p_));
    S *= p_.alpha;

    VectorField adv = advective_derivative(s.u, s.u);
    VectorField gdiv_u = grad(div(s.u));
    std::vector<double> lap5(g.size());

    ScalarField pn(g);
    for (std::size_t k = 0; k < g.size(); ++k) pn.data()[k] = p_.pressure(s.rho.data()[k]);
    VectorField grad_pn = grad(pn);

    // viscous-advective predictor with Dirichlet walls:
    // (I/dt - th*nu*Lap) u** = u^n/dt + G_exp + (1-th)*nu*Lap u^n - grad p(rho^n)/(rho_bar eps^2)
    VectorField rhs(g);
    for (int c = 0; c < dim; ++c) {
        laplacian_stencil(g, s.u.data(c), lap5.data());
        for (std::size_t k = 0; k < g.size(); ++k) {
            double irho = 1.0 / s.rho.data()[k];
            double g_exp = -adv.data(c)[k] + irho * (p_.xi * gdiv_u.data(c)[k] + S.data(c)[k]) +
                           (1.0 / rho_bar - irho) * ie2 * grad_pn.data(c)[k] +
                           p_.mu * (irho - 1.0 / rho_bar) * lap5[k];
            rhs.data(c)[k] = s.u.data(c)[k] / dt + g_exp + (1.0 - th) * nu * lap5[k] -
                             ie2 / rho_bar * grad_pn.data(c)[k];
        }
    }
    VectorField ustar(g);
    dirichlet_viscous_solve(g, dt, th * nu, rhs, ustar);

    // acoustic correction: (I - th^2 dt^2 c^2/eps^2 Lap_N) delta = -dt*[...]
    ScalarField div_ustar = conservative_div(ustar);
    ScalarField div_un = conservative_div(s.u);
    VectorField dev_flux(g);
    for (int c = 0; c < dim; ++c)
        for (std::size_t k = 0; k < g.size(); ++k)
            dev_flux.data(c)[k] = (s.rho.data()[k] - rho_bar) * s.u.data(c)[k];
    ScalarField div_dev = conservative_div(dev_flux);

    ScalarField rhs_delta(g);
    for (std::size_t k = 0; k < g.size(); ++k)
        rhs_delta.data()[k] = -dt * (rho_bar * th * div_ustar.data()[k] +
                                     rho_bar * (1.0 - th) * div_un.data()[k] + div_dev.data()[k]);
    ScalarField delta = neumann_helmholtz_invert(g, th * th * dt * dt * c2 * ie2, rhs_delta);

    VectorField grad_delta = neumann_spectral_grad(g, delta);
    const double corr = th * dt * c2 * ie2 / rho_bar;
    for (int c = 0; c < dim; ++c)
        for (std::size_t k = 0; k < g.size(); ++k)
            next.u.data(c)[k] = ustar.data(c)[k] - corr * grad_delta.data(c)[k];

    // pin the walls, then advance the density with the realized velocity
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            if (i == 0 || i == g.nx() - 1 || (dim == 2 && (j == 0 || j == g.ny() - 1)))
                for (int c = 0; c < dim; ++c) next.u(c, i, j) = 0.0;

    VectorField u_theta(g);
    for (int c = 0; c < dim; ++c)
        for (std::size_t k = 0; k < g.size(); ++k)
            u_theta.data(c)[k] = th * next.u.data(c)[k] + (1.0 - th) * s.u.data(c)[k];
    ScalarField div_utheta = conservative_div(u_theta);
    for (std::size_t k = 0; k < g.size(); ++k)
        next.rho.data()[k] = s.rho.data()[k] -
                             dt * (rho_bar * div_utheta.data()[k] + div_dev.data()[k]);

    double rho_min = 1e300;
    for (std::size_t k = 0; k < g.size(); ++k) rho_min = std::min(rho_min, next.rho.data()[k]);
    if (rho_min <= 0.0)
        throw NumericalFailure("compressible solver: density hit zero at t=" + std::to_string(next.t));

    dissipation_cum_ += dt * dissipation_rate(next.u, N, p_);
    return next;
}

void CompressibleSolver::run(const State& initial,
                             const std::function<void(const State&)>& on_sample) {
    dissipation_cum_ = 0.0;
    if (cfg_.t_end <= 0.0) {
        on_sample(initial);
        return;
    }
    long nsteps = long(std::ceil(cfg_.t_end / cfg_.dt - 1e-12));
    SchemeConfig saved = cfg_;
    cfg_.dt = cfg_.t_end / double(nsteps);  // land on t_end exactly
    State s = initial;
    on_sample(s);
    for (long n = 0; n < nsteps; ++n) {
        try {
            s = step(s);
        } catch (const NumericalFailure&) {
            cfg_ = saved;
            throw;
        }
        if ((n + 1) % cfg_.output_every == 0 || n + 1 == nsteps) on_sample(s);
    }
    cfg_ = saved;
}

Trajectory CompressibleSolver::run(const State& initial) {
    Trajectory traj;
    run(initial, [&](const State& s) {
        traj.times.push_back(s.t);
        traj.states.push_back(s);
        traj.rows.push_back(diagnostics(s, dissipation_cum_));
    });
    return traj;
}

DiagnosticsRow CompressibleSolver::diagnostics(const State& s, double dissipation_cum) const {
    DiagnosticsRow row;
    row.t = s.t;
    EnergyReport e = energy(s, p_, dissipation_cum);
    row.energy = e.total();
    row.dissipation = dissipation_cum;
    row.mass = integrate(s.rho);
    row.max_d = s.max_director_norm();
    ScalarField dev(s.grid());
    for (std::size_t k = 0; k < dev.size(); ++k) dev.data()[k] = s.rho.data()[k] - 1.0;
    row.l2_rho_dev = l2_norm(dev);
    VectorField q = poisson_.project_Q(s.u);
    VectorField pvec = s.u;
    pvec -= q;
    row.l2_qu = l2_norm(q);
    row.l2_pu = l2_norm(pvec);
    return row;
}

State step(const State& s, const Params& p, const SchemeConfig& cfg) {
    CompressibleSolver solver(s.grid(), p, cfg);
    return solver.step(s);
}

Trajectory run(const State& initial, const Params& p, const SchemeConfig& cfg) {
    CompressibleSolver solver(initial.grid(), p, cfg);
    return solver.run(initial);
}

// ---- well-prepared data -----------------------------------------------------

namespace {

// Smooth random low-mode scalar on either grid kind; cosine modes on bounded
// grids (Neumann-compatible), Fourier modes on the torus. Deterministic in rng.
ScalarField random_smooth_scalar(const Grid& g, std::mt19937_64& rng, int kmax) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ScalarField f(g);
    for (int kx = 0; kx <= kmax; ++kx) {
        for (int ky = 0; ky <= (g.dim() == 2 ? kmax : 0); ++ky) {
            if (kx == 0 && ky == 0) continue;
            double amp = gauss(rng) / (1.0 + kx * kx + ky * ky);
            double phx = g.periodic() ? 2.0 * M_PI * std::uniform_real_distribution<>(0, 1)(rng) : 0.0;
            double phy = g.periodic() ? 2.0 * M_PI * std::uniform_real_distribution<>(0, 1)(rng) : 0.0;
            for (int j = 0; j < g.ny(); ++j) {
                for (int i = 0; i < g.nx(); ++i) {
                    double cx = g.periodic() ? std::cos(2.0 * M_PI * kx * g.x(i) / g.lx() + phx)
                                             : std::cos(M_PI * kx * g.x(i) / g.lx());
                    double cy = 1.0;
                    if (g.dim() == 2)
                        cy = g.periodic() ? std::cos(2.0 * M_PI * ky * g.y(j) / g.ly() + phy)
                                          : std::cos(M_PI * ky * g.y(j) / g.ly());
                    f(i, j) += amp * cx * cy;
                }
            }
        }
    }
    return f;
}

}  // namespace

State well_prepared_initial(const Grid& g, const Params& p, unsigned seed) {
    std::mt19937_64 rng(seed);
    State s(g);
    s.t = 0.0;

    // density fluctuation phi0: mean-zero, |phi0| <= 0.05
    ScalarField phi = random_smooth_scalar(g, rng, 3);
    double m = mean(phi);
    for (std::size_t k = 0; k < phi.size(); ++k) phi.data()[k] -= m;
    double amp = max_abs(phi);
    if (amp > 0.0) phi *= 0.05 / amp;
    for (std::size_t k = 0; k < g.size(); ++k)
        s.rho.data()[k] = 1.0 + p.eps * phi.data()[k];

    // solenoidal part w from a stream function, gradient part eps * g
    if (g.dim() == 2) {
        ScalarField psi(g);
        if (g.periodic()) {
            psi = random_smooth_scalar(g, rng, 3);
        } else {
            // stream function with vanishing gradient on the walls
            std::normal_distribution<double> gauss(0.0, 1.0);
            for (int kx = 1; kx <= 2; ++kx)
                for (int ky = 1; ky <= 2; ++ky) {
                    double a = gauss(rng) / (kx * kx + ky * ky);
                    for (int j = 0; j < g.ny(); ++j)
                        for (int i = 0; i < g.nx(); ++i)
                            psi(i, j) += a * (1.0 - std::cos(2.0 * M_PI * kx * g.x(i) / g.lx())) *
                                         (1.0 - std::cos(2.0 * M_PI * ky * g.y(j) / g.ly()));
                }
        }
        VectorField gp = grad(psi);
        double wamp = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k)
            wamp = std::max(wamp, std::hypot(gp.data(0)[k], gp.data(1)[k]));
        double scale_w = wamp > 0.0 ? 0.5 / wamp : 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            s.u.data(0)[k] = scale_w * gp.data(1)[k];    // u = rot psi
            s.u.data(1)[k] = -scale_w * gp.data(0)[k];
        }
    }
    ScalarField chi_g = random_smooth_scalar(g, rng, 2);
    VectorField gg = grad(chi_g);
    double gamp = max_abs(gg);
    double scale_g = gamp > 0.0 ? 0.4 / gamp : 0.0;
    for (int c = 0; c < g.dim(); ++c)
        for (std::size_t k = 0; k < g.size(); ++k)
            s.u.data(c)[k] += p.eps * scale_g * gg.data(c)[k];
    if (!g.periodic()) {
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i)
                if (i == 0 || i == g.nx() - 1 || (g.dim() == 2 && (j == 0 || j == g.ny() - 1)))
                    for (int c = 0; c < g.dim(); ++c) s.u(c, i, j) = 0.0;
    }

    // unit director from a smooth angle field (2D); constant +-1 in 1D
    if (g.dim() == 2) {
        ScalarField chi = random_smooth_scalar(g, rng, 2);
        double camp = max_abs(chi);
        if (camp > 0.0) chi *= 0.7 / camp;
        for (std::size_t k = 0; k < g.size(); ++k) {
            s.d.data(0)[k] = std::cos(chi.data()[k]);
            s.d.data(1)[k] = std::sin(chi.data()[k]);
        }
    } else {
        for (std::size_t k = 0; k < g.size(); ++k) s.d.data(0)[k] = 1.0;
    }
    return s;
}

}  // namespace nemlab
