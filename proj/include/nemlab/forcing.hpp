#pragma once

#include <array>

#include "nemlab/helmholtz.hpp"
#include "nemlab/params.hpp"
#include "nemlab/state.hpp"

namespace nemlab {

/// Co-rotational rate reconstructed from the relaxation identity
/// N = lambda (Lap d - f(d)); the solvers satisfy this up to their stencil.
VectorField corotational_rate(const State& s, const Params& p);

/// Acoustic-equation forcing with the exact semigroup split:
///   G = -Q div(rho u (x) u) + mu Lap Qu + xi grad div u
///       - (a/eps^2) grad[rho^g - g(rho-1) - 1] + alpha Q div(stress tensor).
VectorField assemble_G(const State& s, const Params& p, const PoissonContext& ctx);

/// Forcing of the damped-operator form: the viscous term appears through the
/// density fluctuation, eps (mu + xi) grad div(phi_eps u), with
/// phi_eps = (rho - mean rho)/eps.
VectorField assemble_M(const State& s, const Params& p, const PoissonContext& ctx);

/// The seven pairings <term, test_mode> of the mode-ODE forcing split:
///   I1 = <-Q div(rho u (x) u), m>
///   I2 = <eps mu Lap(phi_eps u), m>
///   I3 = <eps (mu + xi) grad div(phi_eps u), m>
///   I4 = <-(a/eps^2) grad[rho^g - g(rho-1) - 1], m>
///   I5 = <alpha Q grad(F + |grad d|^2/2), m>
///   I6 = <-alpha Q div(grad d (.) grad d), m>
///   I7 = <(alpha/(2 lambda)) Q div(d (x) N - N (x) d), m>
/// I2 and I3 shrink like eps along a sweep; the others stay bounded.
struct ForcingReport {
    std::array<double, 7> I{};
};

ForcingReport boundedness_report(const State& s, const Params& p, const PoissonContext& ctx,
                                 const VectorField& test_mode);

}  // namespace nemlab
