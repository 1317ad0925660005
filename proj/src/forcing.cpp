#include "nemlab/forcing.hpp"

#include <cmath>

#include "nemlab/calculus.hpp"

namespace nemlab {
namespace {

ScalarField pressure_gap(const State& s, const Params& p) {
    ScalarField out(s.grid());
    for (std::size_t k = 0; k < out.size(); ++k) {
        double rho = s.rho.data()[k];
        out.data()[k] = std::pow(rho, p.gamma) - p.gamma * (rho - 1.0) - 1.0;
    }
    return out;
}

VectorField momentum(const State& s) {
    VectorField m(s.grid());
    for (int c = 0; c < s.grid().dim(); ++c)
        for (std::size_t k = 0; k < m.grid().size(); ++k)
            m.data(c)[k] = s.rho.data()[k] * s.u.data(c)[k];
    return m;
}

ScalarField density_fluctuation(const State& s, const Params& p) {
    ScalarField phi(s.grid());
    double rb = mean(s.rho);
    for (std::size_t k = 0; k < phi.size(); ++k)
        phi.data()[k] = (s.rho.data()[k] - rb) / p.eps;
    return phi;
}

}  // namespace

VectorField corotational_rate(const State& s, const Params& p) {
    const Grid& g = s.grid();
    VectorField N(g);
    VectorField f = director_force(s.d, p);
    for (int c = 0; c < g.dim(); ++c) {
        ScalarField comp(g);
        for (std::size_t k = 0; k < g.size(); ++k) comp.data()[k] = s.d.data(c)[k];
        ScalarField lap = laplacian(comp);
        for (std::size_t k = 0; k < g.size(); ++k)
            N.data(c)[k] = p.lambda * (lap.data()[k] - f.data(c)[k]);
    }
    return N;
}

VectorField assemble_G(const State& s, const Params& p, const PoissonContext& ctx) {
    VectorField N = corotational_rate(s, p);
    VectorField m = momentum(s);

    VectorField out = ctx.project_Q(momentum_flux_divergence(m, s.u));
    out *= -1.0;

    VectorField qu = ctx.project_Q(s.u);
    VectorField visc = vector_laplacian(qu);
    visc *= p.mu;
    out += visc;

    VectorField gdiv = grad(div(s.u));
    gdiv *= p.xi;
    out += gdiv;

    VectorField gp = grad(pressure_gap(s, p));
    gp *= -p.a / (p.eps * p.eps);
    out += gp;

    VectorField stress = ctx.project_Q(tensor_divergence(ericksen_stress(s.d, N, p)));
    stress *= p.alpha;
    out += stress;
    return out;
}

VectorField assemble_M(const State& s, const Params& p, const PoissonContext& ctx) {
    const Grid& g = s.grid();
    VectorField N = corotational_rate(s, p);
    VectorField m = momentum(s);

    VectorField out = ctx.project_Q(momentum_flux_divergence(m, s.u));
    out *= -1.0;

    ScalarField phi = density_fluctuation(s, p);
    VectorField phiu(g);
    for (int c = 0; c < g.dim(); ++c)
        for (std::size_t k = 0; k < g.size(); ++k)
            phiu.data(c)[k] = phi.data()[k] * s.u.data(c)[k];
    VectorField gdiv = grad(div(phiu));
    gdiv *= p.eps * (p.mu + p.xi);
    out += gdiv;

    VectorField gp = grad(pressure_gap(s, p));
    gp *= -p.a / (p.eps * p.eps);
    out += gp;

    VectorField stress = ctx.project_Q(tensor_divergence(ericksen_stress(s.d, N, p)));
    stress *= p.alpha;
    out += stress;
    return out;
}

ForcingReport boundedness_report(const State& s, const Params& p, const PoissonContext& ctx,
                                 const VectorField& test_mode) {
    const Grid& g = s.grid();
    require_same_grid(g, test_mode.grid(), "boundedness_report");
    ForcingReport rep;
    VectorField N = corotational_rate(s, p);
    VectorField m = momentum(s);
    ScalarField phi = density_fluctuation(s, p);

    VectorField term = ctx.project_Q(momentum_flux_divergence(m, s.u));
    rep.I[0] = -inner(term, test_mode);

    VectorField phiu(g);
    for (int c = 0; c < g.dim(); ++c)
        for (std::size_t k = 0; k < g.size(); ++k)
            phiu.data(c)[k] = phi.data()[k] * s.u.data(c)[k];
    term = vector_laplacian(phiu);
    rep.I[1] = p.eps * p.mu * inner(term, test_mode);
    term = grad(div(phiu));
    rep.I[2] = p.eps * (p.mu + p.xi) * inner(term, test_mode);

    term = grad(pressure_gap(s, p));
    rep.I[3] = -(p.a / (p.eps * p.eps)) * inner(term, test_mode);

    // elastic pieces, isotropic / distortion / rotation
    ScalarField iso = director_potential(s.d, p);
    for (int c = 0; c < g.dim(); ++c) {
        ScalarField comp(g);
        for (std::size_t k = 0; k < g.size(); ++k) comp.data()[k] = s.d.data(c)[k];
        VectorField dd = grad(comp);
        for (std::size_t k = 0; k < g.size(); ++k)
            for (int a = 0; a < g.dim(); ++a)
                iso.data()[k] += 0.5 * dd.data(a)[k] * dd.data(a)[k];
    }
    term = ctx.project_Q(grad(iso));
    rep.I[4] = p.alpha * inner(term, test_mode);

    // grad d (.) grad d contribution
    TensorField odot(g);
    {
        std::vector<VectorField> dd;
        for (int c = 0; c < g.dim(); ++c) {
            ScalarField comp(g);
            for (std::size_t k = 0; k < g.size(); ++k) comp.data()[k] = s.d.data(c)[k];
            dd.push_back(grad(comp));
        }
        for (int r = 0; r < g.dim(); ++r)
            for (int c = 0; c < g.dim(); ++c)
                for (std::size_t k = 0; k < g.size(); ++k) {
                    double v = 0.0;
                    for (int mdx = 0; mdx < g.dim(); ++mdx)
                        v += dd[mdx].data(r)[k] * dd[mdx].data(c)[k];
                    odot.data(r, c)[k] = v;
                }
    }
    term = ctx.project_Q(tensor_divergence(odot));
    rep.I[5] = -p.alpha * inner(term, test_mode);

    TensorField skew(g);
    for (int r = 0; r < g.dim(); ++r)
        for (int c = 0; c < g.dim(); ++c)
            for (std::size_t k = 0; k < g.size(); ++k)
                skew.data(r, c)[k] = s.d.data(r)[k] * N.data(c)[k] - N.data(r)[k] * s.d.data(c)[k];
    term = ctx.project_Q(tensor_divergence(skew));
    rep.I[6] = (p.alpha / (2.0 * p.lambda)) * inner(term, test_mode);

    return rep;
}

}  // namespace nemlab
