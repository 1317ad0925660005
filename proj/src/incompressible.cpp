#include "nemlab/incompressible.hpp"

#include <cmath>

#include "nemlab/calculus.hpp"
#include "nemlab/director.hpp"

namespace nemlab {

IncompressibleSolver::IncompressibleSolver(const Grid& grid, const Params& p,
                                           const SchemeConfig& cfg)
    : grid_(&grid), p_(p), cfg_(cfg), poisson_(grid) {
    p_.validate();
    cfg_.validate();
}

State IncompressibleSolver::prepare_initial(const State& s) const {
    State out = s;
    out.u = poisson_.project_P(s.u);
    for (std::size_t k = 0; k < out.rho.size(); ++k) out.rho.data()[k] = 1.0;
    if (!grid_->periodic()) {
        const Grid& g = *grid_;
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i)
                if (i == 0 || i == g.nx() - 1 || (g.dim() == 2 && (j == 0 || j == g.ny() - 1)))
                    for (int c = 0; c < g.dim(); ++c) out.u(c, i, j) = 0.0;
    }
    return out;
}

State IncompressibleSolver::step(const State& s) {
    const Grid& g = *grid_;
    const double dt = cfg_.dt, th = cfg_.imex_theta;
    const int dim = g.dim();

    if (!s.finite())
        throw NumericalFailure("incompressible solver: non-finite fields at t=" + std::to_string(s.t));

    State next(g);
    next.t = s.t + dt;
    next.d = s.d;
    for (std::size_t k = 0; k < next.rho.size(); ++k) next.rho.data()[k] = 1.0;

    VectorField N = advance_director(next.d, s.u, p_, dt, cfg_.director_substeps);

    VectorField S = tensor_divergence(ericksen_stress(next.d, N, p_));
    S *= p_.alpha;
    VectorField adv = advective_derivative(s.u, s.u);

    // implicit-viscosity predictor
    VectorField ustar(g);
    if (g.periodic()) {
        // (I/dt - th mu Lap) u* = u/dt - adv + S + (1-th) mu Lap u
        VectorField lap_u = vector_laplacian(s.u);
        VectorField rhs(g);
        for (int c = 0; c < dim; ++c)
            for (std::size_t k = 0; k < g.size(); ++k)
                rhs.data(c)[k] = s.u.data(c)[k] + dt * (-adv.data(c)[k] + S.data(c)[k] +
                                                        (1.0 - th) * p_.mu * lap_u.data(c)[k]);
        ScalarField dummy(g);
        for (int c = 0; c < dim; ++c)
            helmholtz_invert_stencil(g, dt * th * p_.mu, rhs.data(c), dummy.data(), ustar.data(c));
    } else {
        std::vector<double> lap5(g.size());
        VectorField rhs(g);
        ScalarField zero(g);
        for (int c = 0; c < dim; ++c) {
            laplacian_stencil(g, s.u.data(c), lap5.data());
            for (std::size_t k = 0; k < g.size(); ++k)
                rhs.data(c)[k] = s.u.data(c)[k] + dt * (-adv.data(c)[k] + S.data(c)[k] +
                                                        (1.0 - th) * p_.mu * lap5[k]);
            helmholtz_invert_stencil(g, dt * th * p_.mu, rhs.data(c), zero.data(), ustar.data(c));
        }
    }

    // projection; the multiplier potential is logged, not asserted
    ScalarField div_star = poisson_.compatible_divergence(ustar);
    try {
        ScalarField pi = poisson_.inv_laplacian(div_star);
        pi *= 1.0 / dt;
        last_pi_norm_ = l2_norm(pi);
    } catch (const CompatibilityError&) {
        last_pi_norm_ = std::nan("");
    }
    next.u = poisson_.project_P(ustar);

    if (!g.periodic()) {
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i)
                if (i == 0 || i == g.nx() - 1 || (dim == 2 && (j == 0 || j == g.ny() - 1)))
                    for (int c = 0; c < dim; ++c) next.u(c, i, j) = 0.0;
    }

    dissipation_cum_ += dt * dissipation_rate(next.u, N, p_);
    return next;
}

void IncompressibleSolver::run(const State& initial,
                               const std::function<void(const State&)>& on_sample) {
    dissipation_cum_ = 0.0;
    if (cfg_.t_end <= 0.0) {
        on_sample(initial);
        return;
    }
    long nsteps = long(std::ceil(cfg_.t_end / cfg_.dt - 1e-12));
    SchemeConfig saved = cfg_;
    cfg_.dt = cfg_.t_end / double(nsteps);
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

Trajectory IncompressibleSolver::run(const State& initial) {
    Trajectory traj;
    run(initial, [&](const State& s) {
        traj.times.push_back(s.t);
        traj.states.push_back(s);
        traj.rows.push_back(diagnostics(s, dissipation_cum_));
    });
    return traj;
}

DiagnosticsRow IncompressibleSolver::diagnostics(const State& s, double dissipation_cum) const {
    DiagnosticsRow row;
    row.t = s.t;
    // limit-system energy: kinetic (rho = 1) + elastic + potential
    Params p0 = p_;
    EnergyReport e = energy(s, p0, dissipation_cum);
    row.energy = e.kinetic + e.elastic + e.potential;
    row.dissipation = dissipation_cum;
    row.mass = integrate(s.rho);
    row.max_d = s.max_director_norm();
    row.l2_rho_dev = 0.0;
    VectorField q = poisson_.project_Q(s.u);
    VectorField pv = s.u;
    pv -= q;
    row.l2_qu = l2_norm(q);
    row.l2_pu = l2_norm(pv);
    row.l2_div_u = l2_norm(poisson_.compatible_divergence(s.u));
    row.l2_pi = last_pi_norm_;
    return row;
}

State step_inc(const State& s, const Params& p, const SchemeConfig& cfg) {
    IncompressibleSolver solver(s.grid(), p, cfg);
    return solver.step(s);
}

Trajectory run_inc(const State& initial, const Params& p, const SchemeConfig& cfg) {
    IncompressibleSolver solver(initial.grid(), p, cfg);
    return solver.run(initial);
}

}  // namespace nemlab
