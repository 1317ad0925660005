#pragma once

#include <vector>

#include "nemlab/field.hpp"
#include "nemlab/params.hpp"
#include "nemlab/state.hpp"

namespace nemlab {

/// Components of the scaled energy functional; all non-negative.
struct EnergyReport {
    double kinetic = 0.0;       // (1/2) int rho |u|^2
    double elastic = 0.0;       // (alpha/2) int |grad d|^2
    double potential = 0.0;     // alpha int F(d)
    double pressure_dev = 0.0;  // (1/(eps^2(gamma-1))) int [rho^g - g(rho-1) - 1]
    double dissipation_cum = 0.0;

    double total() const { return kinetic + elastic + potential + pressure_dev; }
};

EnergyReport energy(const State& s, const Params& p, double dissipation_cum = 0.0);

/// Instantaneous dissipation density integral
///   int mu |grad u|^2 + xi |div u|^2 + (alpha/lambda) |N|^2.
double dissipation_rate(const VectorField& u, const VectorField& N, const Params& p);

/// value = x^gamma - gamma(x-1) - 1 and the lower-bound ratio of the
/// three-case convexity estimate: value/|x-1|^gamma for gamma >= 2 and for
/// the far branch of gamma < 2; value/|x-1|^2 on the near branch. The ratio
/// at the tangency point x = 1 is reported as 0.
struct ConvexityGap {
    double value = 0.0;
    double ratio = 0.0;
};
ConvexityGap convexity_gap(double x, double gamma, double delta = 0.5);

/// Sampled positive lower bound nu_delta over x in [0, x_max], |x-1| >= delta.
double sampled_convexity_constant(double gamma, double delta, double x_max = 3.0);

/// (||rho - 1||_Lgamma, L2 of phi on {|rho-1| <= 1/2}, Lgamma of phi on
/// {|rho-1| >= 1/2}) with phi = (rho - mean rho)/eps.
struct DensityMetrics {
    double lgamma_dev = 0.0;
    double orlicz_small = 0.0;
    double orlicz_large = 0.0;
};
DensityMetrics density_metrics(const State& s, const Params& p);

/// L2 norms of u masked by {|rho-1| <= 1/2} and its complement; the masks are
/// disjoint so u1^2 + u2^2 = ||u||^2 exactly.
struct VelocitySplit {
    double u1_norm = 0.0;
    double u2_norm = 0.0;
};
VelocitySplit velocity_split(const State& s);

/// Space-time L2 distances between sampled trajectories:
///   int ||P u_eps - u||^2 dt, int ||Q u_eps||^2 dt, int ||u_eps - u||^2 dt
/// by trapezoidal quadrature over the common sample times.
struct ProjectedConvergence {
    double pu_err = 0.0;
    double qu_norm = 0.0;
    double u_err = 0.0;
};
class PoissonContext;
ProjectedConvergence projected_convergence(const std::vector<double>& times,
                                           const std::vector<VectorField>& u_eps,
                                           const std::vector<VectorField>& u_ref,
                                           const PoissonContext& ctx);

/// Least-squares fit of log(y) against log(x); `half_width` is twice the
/// standard error of the slope.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double half_width = 0.0;
    double residual = 0.0;
};
SlopeFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace nemlab
