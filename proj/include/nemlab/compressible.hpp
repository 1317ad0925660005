#pragma once

#include <functional>
#include <vector>

#include "nemlab/diagnostics.hpp"
#include "nemlab/helmholtz.hpp"
#include "nemlab/params.hpp"
#include "nemlab/state.hpp"

namespace nemlab {

/// Per-step diagnostics row; the CSV columns of the run output.
struct DiagnosticsRow {
    double t = 0.0;
    double energy = 0.0;           // E_eps(t)
    double dissipation = 0.0;      // cumulative claimed dissipation
    double mass = 0.0;             // int rho
    double max_d = 0.0;            // max_x |d|
    double l2_rho_dev = 0.0;       // ||rho - 1||_L2
    double l2_qu = 0.0;            // ||Q u||_L2
    double l2_pu = 0.0;            // ||P u||_L2
    double l2_div_u = 0.0;         // incompressible runs only
    double l2_pi = 0.0;            // incompressible runs only
};

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;     // snapshots at the output cadence
    std::vector<DiagnosticsRow> rows;
};

/// IMEX integrator for the scaled compressible system. The stiff acoustic
/// part and the viscous terms are implicit with constant coefficients
/// (pressure linearized about the mean density, which mass conservation keeps
/// fixed in time); transport and the director stress are explicit. Stable
/// uniformly in eps: per-step cost does not depend on eps.
class CompressibleSolver {
  public:
    CompressibleSolver(const Grid& grid, const Params& p, const SchemeConfig& cfg);

    State step(const State& s);

    /// March to t_end, invoking `on_sample` at t=0 and every output_every
    /// steps (and at the final step). Throws NumericalFailure with the
    /// failing time on negative density, CFL violation or non-finite fields.
    void run(const State& initial, const std::function<void(const State&)>& on_sample);

    Trajectory run(const State& initial);

    DiagnosticsRow diagnostics(const State& s, double dissipation_cum) const;

    const PoissonContext& poisson() const { return poisson_; }

  private:
    State step_periodic(const State& s);
    State step_bounded(const State& s);
    void check_admissible(const State& s) const;

    const Grid* grid_;
    Params p_;
    SchemeConfig cfg_;
    PoissonContext poisson_;
    double dissipation_cum_ = 0.0;

  public:
    double dissipation_cum() const { return dissipation_cum_; }
};

/// Single step with a throwaway solver; convenience for tests.
State step(const State& s, const Params& p, const SchemeConfig& cfg);

Trajectory run(const State& initial, const Params& p, const SchemeConfig& cfg);

}  // namespace nemlab
