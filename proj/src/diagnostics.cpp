#include "nemlab/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nemlab/calculus.hpp"
#include "nemlab/helmholtz.hpp"

namespace nemlab {

EnergyReport energy(const State& s, const Params& p, double dissipation_cum) {
    const Grid& g = s.grid();
    EnergyReport r;
    r.dissipation_cum = dissipation_cum;

    ScalarField F = director_potential(s.d, p);
    std::vector<VectorField> dd;
    dd.reserve(g.dim());
    for (int c = 0; c < g.dim(); ++c) {
        ScalarField comp(g);
        for (std::size_t k = 0; k < g.size(); ++k) comp.data()[k] = s.d.data(c)[k];
        dd.push_back(grad(comp));
    }

    const double ie2 = 1.0 / (p.eps * p.eps * (p.gamma - 1.0));
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            double w = g.weight(i, j);
            double rho = s.rho(i, j);
            double u2 = 0.0, gd2 = 0.0;
            for (int c = 0; c < g.dim(); ++c) {
                u2 += s.u(c, i, j) * s.u(c, i, j);
                for (int a = 0; a < g.dim(); ++a) gd2 += dd[c](a, i, j) * dd[c](a, i, j);
            }
            r.kinetic += w * 0.5 * rho * u2;
            r.elastic += w * 0.5 * p.alpha * gd2;
            r.potential += w * p.alpha * F(i, j);
            double gap = std::pow(rho, p.gamma) - p.gamma * (rho - 1.0) - 1.0;
            r.pressure_dev += w * ie2 * std::max(gap, 0.0);
        }
    }
    return r;
}

double dissipation_rate(const VectorField& u, const VectorField& N, const Params& p) {
    const Grid& g = u.grid();
    double total = 0.0;
    std::vector<VectorField> du;
    for (int c = 0; c < g.dim(); ++c) {
        ScalarField comp(g);
        for (std::size_t k = 0; k < g.size(); ++k) comp.data()[k] = u.data(c)[k];
        du.push_back(grad(comp));
    }
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            double w = g.weight(i, j);
            double gu2 = 0.0, divu = 0.0, n2 = 0.0;
            for (int c = 0; c < g.dim(); ++c) {
                for (int a = 0; a < g.dim(); ++a) gu2 += du[c](a, i, j) * du[c](a, i, j);
                divu += du[c](c, i, j);
                n2 += N(c, i, j) * N(c, i, j);
            }
            total += w * (p.mu * gu2 + p.xi * divu * divu + p.alpha / p.lambda * n2);
        }
    }
    return total;
}

ConvexityGap convexity_gap(double x, double gamma, double delta) {
    if (x < 0.0) throw std::invalid_argument("convexity_gap: x must be >= 0");
    ConvexityGap r;
    r.value = std::pow(x, gamma) - gamma * (x - 1.0) - 1.0;
    double dev = std::abs(x - 1.0);
    if (dev < 1e-14) return r;  // tangency point
    bool near_branch = gamma < 2.0 && dev <= delta;
    r.ratio = near_branch ? r.value / (dev * dev) : r.value / std::pow(dev, gamma);
    return r;
}

double sampled_convexity_constant(double gamma, double delta, double x_max) {
    double nu = std::numeric_limits<double>::max();
    const int samples = 2000;
    for (int k = 0; k <= samples; ++k) {
        double x = x_max * k / samples;
        if (std::abs(x - 1.0) < delta) continue;
        nu = std::min(nu, convexity_gap(x, gamma, delta).ratio);
    }
    return nu;
}

DensityMetrics density_metrics(const State& s, const Params& p) {
    const Grid& g = s.grid();
    DensityMetrics m;
    double rho_bar = mean(s.rho);
    double sum_lg = 0.0, sum_small = 0.0, sum_large = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            double w = g.weight(i, j);
            double dev = s.rho(i, j) - 1.0;
            double phi = (s.rho(i, j) - rho_bar) / p.eps;
            sum_lg += w * std::pow(std::abs(dev), p.gamma);
            if (std::abs(dev) <= 0.5)
                sum_small += w * phi * phi;
            else
                sum_large += w * std::pow(std::abs(phi), p.gamma);
        }
    }
    m.lgamma_dev = std::pow(sum_lg, 1.0 / p.gamma);
    m.orlicz_small = std::sqrt(sum_small);
    m.orlicz_large = std::pow(sum_large, 1.0 / p.gamma);
    return m;
}

VelocitySplit velocity_split(const State& s) {
    const Grid& g = s.grid();
    VelocitySplit v;
    double s1 = 0.0, s2 = 0.0;
    for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
            double w = g.weight(i, j);
            double u2 = 0.0;
            for (int c = 0; c < g.dim(); ++c) u2 += s.u(c, i, j) * s.u(c, i, j);
            if (std::abs(s.rho(i, j) - 1.0) <= 0.5)
                s1 += w * u2;
            else
                s2 += w * u2;
        }
    }
    v.u1_norm = std::sqrt(s1);
    v.u2_norm = std::sqrt(s2);
    return v;
}

ProjectedConvergence projected_convergence(const std::vector<double>& times,
                                           const std::vector<VectorField>& u_eps,
                                           const std::vector<VectorField>& u_ref,
                                           const PoissonContext& ctx) {
    if (times.size() != u_eps.size() || times.size() != u_ref.size() || times.size() < 2)
        throw std::invalid_argument("projected_convergence: sample mismatch");
    ProjectedConvergence out;
    std::vector<double> pu2(times.size()), qu2(times.size()), ue2(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        require_same_grid(u_eps[k].grid(), u_ref[k].grid(), "projected_convergence");
        VectorField q = ctx.project_Q(u_eps[k]);
        VectorField pdiff = u_eps[k];
        pdiff -= q;             // P u_eps
        pdiff -= u_ref[k];      // P u_eps - u
        VectorField udiff = u_eps[k];
        udiff -= u_ref[k];
        double pn = l2_norm(pdiff), qn = l2_norm(q), un = l2_norm(udiff);
        pu2[k] = pn * pn;
        qu2[k] = qn * qn;
        ue2[k] = un * un;
    }
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        double half_dt = 0.5 * (times[k + 1] - times[k]);
        out.pu_err += half_dt * (pu2[k] + pu2[k + 1]);
        out.qu_norm += half_dt * (qu2[k] + qu2[k + 1]);
        out.u_err += half_dt * (ue2[k] + ue2[k + 1]);
    }
    return out;
}

SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_loglog: need >= 2 samples");
    const int n = int(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = 0; k < n; ++k) {
        double lx = std::log(x[k]), ly = std::log(y[k]);
        sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
    }
    SlopeFit f;
    double det = n * sxx - sx * sx;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy * sxx - sx * sxy) / det;
    double ss = 0.0;
    for (int k = 0; k < n; ++k) {
        double r = std::log(y[k]) - (f.intercept + f.slope * std::log(x[k]));
        ss += r * r;
    }
    f.residual = std::sqrt(ss);
    if (n > 2) {
        double se = std::sqrt(ss / (n - 2) / (sxx - sx * sx / n));
        f.half_width = 2.0 * se;
    }
    return f;
}

}  // namespace nemlab
