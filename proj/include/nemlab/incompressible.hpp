#pragma once

#include <functional>

#include "nemlab/compressible.hpp"

namespace nemlab {

/// Projection-method reference solver for the limit system: the director
/// stage is shared with the compressible solver; the velocity stage is
/// explicit advection + stress divergence, implicit viscosity, then Helmholtz
/// projection P. rho stays identically 1. The projection multiplier pi is
/// recovered and logged but carries no claim beyond being a gradient
/// potential.
class IncompressibleSolver {
  public:
    IncompressibleSolver(const Grid& grid, const Params& p, const SchemeConfig& cfg);

    State step(const State& s);

    void run(const State& initial, const std::function<void(const State&)>& on_sample);
    Trajectory run(const State& initial);

    DiagnosticsRow diagnostics(const State& s, double dissipation_cum) const;

    /// Projects the supplied velocity (the limit initial condition is P u0).
    State prepare_initial(const State& s) const;

    const PoissonContext& poisson() const { return poisson_; }
    double dissipation_cum() const { return dissipation_cum_; }
    double last_pi_norm() const { return last_pi_norm_; }

  private:
    const Grid* grid_;
    Params p_;
    SchemeConfig cfg_;
    PoissonContext poisson_;
    double dissipation_cum_ = 0.0;
    double last_pi_norm_ = 0.0;
};

State step_inc(const State& s, const Params& p, const SchemeConfig& cfg);
Trajectory run_inc(const State& initial, const Params& p, const SchemeConfig& cfg);

}  // namespace nemlab
