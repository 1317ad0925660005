#pragma once

#include <vector>

#include "nemlab/diagnostics.hpp"
#include "nemlab/field.hpp"

namespace nemlab {

/// The acoustic pair phi = (phi, m) the wave operator acts on.
struct AcousticVec {
    ScalarField phi;
    VectorField m;

    explicit AcousticVec(const Grid& g) : phi(g), m(g) {}
    const Grid& grid() const { return phi.grid(); }
};

/// Weighted energy B ||phi||^2 + ||m||^2, conserved by the semigroup.
double acoustic_energy(const AcousticVec& v, double B);

/// A(phi, m) = (div m, B grad phi).
AcousticVec apply_A(const AcousticVec& v, double B);

/// Exact solution operator of phi_t + A phi = 0 on periodic grids: per-mode
/// rotation with frequency sqrt(B)|k|. Bounded grids are unsupported (the
/// eigenmode expansion is the tool there).
AcousticVec semigroup_L(double t, const AcousticVec& v0, double B);

/// Uniform time samples of a forcing term G(s), s = k * dt, k = 0..n-1.
struct AcousticForcing {
    double dt = 0.0;
    std::vector<AcousticVec> samples;
};

/// phi(t) = L(t/eps) phi0 + int_0^t L((t-s)/eps) G(s) ds. The integral is
/// evaluated per Fourier mode with exponential weights, exact for forcing
/// that is piecewise linear between samples; the sampling step controls the
/// quadrature error.
AcousticVec duhamel_solve(const AcousticVec& v0, const AcousticForcing& forcing, double t,
                          double eps, double B);

/// Convolution with the standard normalized bump chi(x) = exp(-1/(1-|x|^2))
/// on |x| < 1, rescaled to width delta and discretely normalized to unit
/// mass; periodic grids only. Throws if delta < 2 grid spacings.
ScalarField mollify(const ScalarField& g, double delta);

/// Fit of log ||g - g * chi_delta||_{L^p} against log delta.
SlopeFit mollifier_rates(const ScalarField& g, double p, const std::vector<double>& deltas);

}  // namespace nemlab
