#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nemlab {

/// Physical and scaling constants of the compressible nematic system.
struct Params {
    double mu = 0.05;      // shear viscosity, > 0
    double xi = 0.02;      // bulk viscosity combination, mu + xi > 0
    double lambda = 0.1;   // director relaxation rate, > 0
    double alpha = 0.1;    // elasticity coupling, > 0
    double a = 1.0;        // pressure constant p = a rho^gamma, > 0
    double gamma = 2.0;    // adiabatic exponent, > 3/2
    double eps = 0.1;      // Mach scaling parameter, in (0, 1]
    double zeta = 0.5;     // Ginzburg-Landau width, > 0

    void validate() const {
        if (!(mu > 0.0)) throw std::invalid_argument("params: mu must be > 0");
        if (!(mu + xi > 0.0)) throw std::invalid_argument("params: mu + xi must be > 0");
        if (!(alpha > 0.0)) throw std::invalid_argument("params: alpha must be > 0");
        if (!(lambda > 0.0)) throw std::invalid_argument("params: lambda must be > 0");
        if (!(gamma > 1.5)) throw std::invalid_argument("params: gamma must be > 3/2");
        if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("params: eps must be in (0,1]");
        if (!(zeta > 0.0)) throw std::invalid_argument("params: zeta must be > 0");
    }

    double pressure(double rho) const { return a * std::pow(rho, gamma); }
    /// p'(rho) = a gamma rho^(gamma-1); squared sound speed at density rho.
    double sound_speed_sq(double rho) const { return a * gamma * std::pow(rho, gamma - 1.0); }
};

/// Time integration controls shared by both solvers.
struct SchemeConfig {
    double dt = 1e-3;
    double t_end = 0.1;
    double imex_theta = 1.0;     // implicitness weight in [1/2, 1]
    double cfl_safety = 0.4;     // in (0, 1]
    int director_substeps = 1;   // >= 1
    int output_every = 1;        // snapshot/diagnostic cadence in steps

    void validate() const {
        if (!(dt > 0.0)) throw std::invalid_argument("scheme: dt must be > 0");
        if (!(t_end >= 0.0)) throw std::invalid_argument("scheme: t_end must be >= 0");
        if (!(imex_theta >= 0.5 && imex_theta <= 1.0))
            throw std::invalid_argument("scheme: imex_theta must be in [1/2, 1]");
        if (!(cfl_safety > 0.0 && cfl_safety <= 1.0))
            throw std::invalid_argument("scheme: cfl_safety must be in (0, 1]");
        if (director_substeps < 1) throw std::invalid_argument("scheme: director_substeps >= 1");
        if (output_every < 1) throw std::invalid_argument("scheme: output_every >= 1");
    }

    /// Advective/viscous stability bound; acoustics are implicit and do not
    /// constrain dt.
    double dt_bound(double h, int dim, double u_max, const Params& p) const {
        double adv = h / (u_max + 1.0);
        double visc = h * h / (2.0 * dim * std::max(p.mu + p.xi, p.lambda));
        return cfl_safety * std::min(adv, visc);
    }
};

}  // namespace nemlab
