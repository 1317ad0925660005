#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "nemlab/diagnostics.hpp"
#include "nemlab/helmholtz.hpp"

using namespace nemlab;

TEST_CASE("energy components of simple states") {
    Grid g = Grid::periodic2d(2 * M_PI, 2 * M_PI, 64, 64);
    Params p;
    p.gamma = 2.0;
    p.alpha = 0.7;
    p.eps = 0.1;

    State s(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        s.rho.data()[k] = 1.0;
        s.d.data(0)[k] = 1.0;
    }
    EnergyReport e0 = energy(s, p);
    CHECK(e0.kinetic == 0.0);
    CHECK(e0.elastic < 1e-12);
    CHECK(e0.potential < 1e-20);
    CHECK(e0.pressure_dev < 1e-20);

    // d = (cos x, sin x): |grad d|^2 = 1, elastic = alpha/2 |D|
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            s.d(0, i, j) = std::cos(g.x(i));
            s.d(1, i, j) = std::sin(g.x(i));
        }
    EnergyReport e1 = energy(s, p);
    CHECK(e1.elastic ==
          doctest::Approx(0.5 * p.alpha * g.volume()).epsilon(1e-10));

    // rho = 1 + eps 0.1 sin x, gamma = 2: pressure_dev = 0.005 |D| exactly
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) s.rho(i, j) = 1.0 + p.eps * 0.1 * std::sin(g.x(i));
    EnergyReport e2 = energy(s, p);
    CHECK(e2.pressure_dev == doctest::Approx(0.005 * g.volume()).epsilon(1e-10));
}

TEST_CASE("convexity gap values and sampled constant") {
    CHECK(convexity_gap(1.0, 2.0).value == 0.0);
    ConvexityGap c2 = convexity_gap(2.0, 2.0);
    CHECK(c2.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c2.ratio == doctest::Approx(1.0).epsilon(1e-14));
    ConvexityGap c0 = convexity_gap(0.0, 2.0);
    CHECK(c0.value == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c0.ratio == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(convexity_gap(-0.5, 2.0), std::invalid_argument);

    // nu_delta positive over the sampled range for several gammas
    for (double gamma : {1.6, 2.0, 3.0}) {
        double nu = sampled_convexity_constant(gamma, 0.1);
        CHECK(nu > 0.0);
    }
}

TEST_CASE("density metrics: constants and the sine oracle") {
    Grid g = Grid::periodic1d(2 * M_PI, 256);
    Params p;
    p.gamma = 2.0;
    p.eps = 0.05;
    State s(g);
    for (std::size_t k = 0; k < g.size(); ++k) {
        s.rho.data()[k] = 1.0;
        s.d.data(0)[k] = 1.0;
    }
    DensityMetrics m0 = density_metrics(s, p);
    CHECK(m0.lgamma_dev == 0.0);
    CHECK(m0.orlicz_small == 0.0);
    CHECK(m0.orlicz_large == 0.0);

    // constant fluctuation: phi = 0 after mean removal
    for (std::size_t k = 0; k < g.size(); ++k) s.rho.data()[k] = 1.0 + p.eps * 0.2;
    DensityMetrics m1 = density_metrics(s, p);
    CHECK(m1.orlicz_small < 1e-13);
    CHECK(m1.orlicz_large == 0.0);

    // rho = 1 + eps sin x: orlicz_small = sqrt(int sin^2) = sqrt(pi)
    for (int i = 0; i < g.nx(); ++i) s.rho(i) = 1.0 + p.eps * std::sin(g.x(i));
    DensityMetrics m2 = density_metrics(s, p);
    CHECK(m2.orlicz_small == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
}

TEST_CASE("velocity split: masks and the exact Pythagoras identity") {
    Grid g = Grid::periodic1d(2 * M_PI, 128);
    State s(g);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> dist;
    for (int i = 0; i < g.nx(); ++i) {
        s.rho(i) = i < g.nx() / 2 ? 2.0 : 1.0;  // half the domain far from 1
        s.u(0, i) = dist(rng);
        s.d(0, i) = 1.0;
    }
    VelocitySplit vs = velocity_split(s);
    double u2 = l2_norm(s.u);
    CHECK(vs.u1_norm * vs.u1_norm + vs.u2_norm * vs.u2_norm ==
          doctest::Approx(u2 * u2).epsilon(1e-12));

    // direct quadrature of each half
    double s2 = 0.0;
    for (int i = 0; i < g.nx() / 2; ++i) s2 += g.weight(i, 0) * s.u(0, i) * s.u(0, i);
    CHECK(vs.u2_norm == doctest::Approx(std::sqrt(s2)).epsilon(1e-12));

    // rho = 1 everywhere: the u2 part is empty
    for (int i = 0; i < g.nx(); ++i) s.rho(i) = 1.0;
    CHECK(velocity_split(s).u2_norm == 0.0);
}

TEST_CASE("density metrics chain: Lgamma bounded via the convexity constant") {
    Grid g = Grid::periodic1d(2 * M_PI, 128);
    Params p;
    p.gamma = 2.0;
    p.eps = 0.05;
    State s(g);
    for (int i = 0; i < g.nx(); ++i) {
        s.rho(i) = 1.0 + p.eps * 0.5 * std::sin(g.x(i));
        s.d(0, i) = 1.0;
    }
    EnergyReport e = energy(s, p);
    DensityMetrics m = density_metrics(s, p);
    double nu = sampled_convexity_constant(p.gamma, 1e-3);
    // ||rho-1||_g^g <= (gamma-1) eps^2 pressure_dev / nu
    double lhs = std::pow(m.lgamma_dev, p.gamma);
    double rhs = (p.gamma - 1.0) * p.eps * p.eps * e.pressure_dev / nu;
    CHECK(lhs <= rhs * (1.0 + 1e-9));
}

TEST_CASE("projected convergence distances") {
    Grid g = Grid::periodic2d(2 * M_PI, 2 * M_PI, 32, 32);
    PoissonContext ctx(g);
    std::vector<double> times{0.0, 0.1, 0.2};
    std::vector<VectorField> traj, ref;
    for (int k = 0; k < 3; ++k) {
        VectorField u(g);
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i) {
                u(0, i, j) = -std::sin(g.y(j)) * (1.0 + k);
                u(1, i, j) = std::sin(g.x(i)) * (1.0 + k);
            }
        traj.push_back(u);
        ref.push_back(u);
    }
    ProjectedConvergence pc = projected_convergence(times, traj, ref, ctx);
    CHECK(pc.pu_err < 1e-18);
    CHECK(pc.u_err < 1e-18);
    CHECK(pc.qu_norm < 1e-18);

    // add a pure gradient: only the Q-norm sees it
    std::vector<VectorField> shifted;
    ScalarField pot(g);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) pot(i, j) = std::cos(g.x(i));
    for (int k = 0; k < 3; ++k) {
        VectorField u = traj[std::size_t(k)];
        VectorField gp(g);
        for (int j = 0; j < g.ny(); ++j)
            for (int i = 0; i < g.nx(); ++i) gp(0, i, j) = -std::sin(g.x(i));
        u += gp;
        shifted.push_back(u);
    }
    ProjectedConvergence pc2 = projected_convergence(times, shifted, ref, ctx);
    CHECK(pc2.pu_err < 1e-18);
    double g_norm2 = M_PI * 2 * M_PI;  // int sin^2 x over the torus
    CHECK(pc2.qu_norm == doctest::Approx(0.2 * g_norm2).epsilon(1e-8));

    CHECK_THROWS_AS(projected_convergence({0.0}, {traj[0]}, {ref[0]}, ctx),
                    std::invalid_argument);
}

TEST_CASE("log-log slope fit recovers a power law") {
    std::vector<double> x{0.1, 0.05, 0.025, 0.0125}, y;
    for (double v : x) y.push_back(3.0 * std::pow(v, 1.7));
    SlopeFit f = fit_loglog(x, y);
    CHECK(f.slope == doctest::Approx(1.7).epsilon(1e-12));
    CHECK(f.residual < 1e-12);
    CHECK(f.half_width < 1e-10);
}
