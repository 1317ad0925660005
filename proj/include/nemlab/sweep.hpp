#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nemlab/compressible.hpp"
#include "nemlab/configfile.hpp"
#include "nemlab/diagnostics.hpp"
#include "nemlab/forcing.hpp"

namespace nemlab {

/// Per-eps results of a sweep: the diagnostics series, the summary norms the
/// theorems speak about, and the forcing pairings.
struct SweepRun {
    double eps = 0.0;
    bool converged = false;
    std::string failure;

    std::vector<DiagnosticsRow> rows;

    double sup_l2_rho_dev = 0.0;       // sup_t ||rho - 1||_L2
    double sup_lgamma_dev = 0.0;       // sup_t ||rho - 1||_Lgamma
    double sup_orlicz_small = 0.0;
    double sup_orlicz_large = 0.0;
    double sup_u1 = 0.0, sup_u2 = 0.0;
    double max_d = 0.0;
    double energy_margin = 0.0;        // max_t (E + dissip)/E(0) - 1

    double qu_l2l2 = 0.0;              // int ||Q u_eps||^2 dt
    double pu_err_l2l2 = 0.0;          // int ||P u_eps - u_inc||^2 dt
    double u_err_l2l2 = 0.0;           // int ||u_eps - u_inc||^2 dt
    double d_err_l2l2 = 0.0;           // int ||d_eps - d_inc||^2 dt

    std::array<double, 7> max_abs_I{}; // max_t |I_i|
};

struct SweepReport {
    std::vector<double> eps_list;
    unsigned seed = 0;
    std::string grid_desc;
    std::vector<SweepRun> runs;
    std::vector<DiagnosticsRow> reference_rows;  // incompressible run

    SlopeFit rho_slope;     // sup_t ||rho-1||_L2 vs eps
    SlopeFit qu_slope;      // int ||Qu||^2 vs eps (recorded, not asserted)
    SlopeFit u_err_slope;
    SlopeFit i2_slope, i3_slope;

    /// Versioned JSON rendering; identical configs give identical bytes.
    std::string to_json() const;
};

/// Run the compressible solver for every eps (concurrently), the
/// incompressible reference once from the projected limit data, and fit the
/// convergence rates. A failed run is annotated and excluded from fits.
SweepReport sweep(const RunConfig& config);

}  // namespace nemlab
