#pragma once

#include "nemlab/field.hpp"
#include "nemlab/params.hpp"

namespace nemlab {

/// Discrete unknowns of the compressible system at one time instant.
struct State {
    double t = 0.0;
    ScalarField rho;
    VectorField u;
    VectorField d;

    explicit State(const Grid& grid) : rho(grid), u(grid), d(grid) {}

    const Grid& grid() const { return rho.grid(); }

    bool finite() const { return rho.finite() && u.finite() && d.finite(); }

    double min_rho() const {
        double m = rho.data()[0];
        for (std::size_t k = 0; k < rho.size(); ++k) m = std::min(m, rho.data()[k]);
        return m;
    }

    double max_director_norm() const { return max_abs(d); }
};

/// Thrown when a solver aborts: negative density, CFL violation, non-finite
/// fields or a failed linear solve. Carries the failing time in the message.
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Random smooth data with uniformly bounded scaled energy: rho0 = 1 + eps*phi0
/// with mean-zero phi0 (|phi0| <= 0.05), u0 = w + eps*g with w solenoidal and
/// g a gradient field, and |d0| = 1 pointwise (unit normalization by
/// construction). The same seed reproduces the same (phi0, w, g, d0) bases for
/// every eps, so E_eps(0) varies only through O(eps) cross terms.
State well_prepared_initial(const Grid& grid, const Params& p, unsigned seed);

}  // namespace nemlab
