#pragma once

#include "nemlab/field.hpp"
#include "nemlab/params.hpp"

namespace nemlab {

/// One director step shared by both solvers. The update is built from four
/// norm-nonexpansive maps so max|d| <= max(|d^n|, boundary data) holds to
/// rounding:
///   1. semi-Lagrangian transport (convex interpolation weights),
///   2. exact pointwise rotation by exp(dt * Omega) (orthogonal),
///   3. explicit Ginzburg-Landau force, substepped so dt_s <= zeta^2/(4 lambda),
///   4. implicit diffusion (I - dt lambda Lap_h)^{-1} with the compact stencil,
///      whose inverse is an averaging M-matrix.
/// On Dirichlet grids the boundary values are pinned (d = d^0 on the wall).
///
/// Returns the discrete co-rotational rate N = (d^{n+1} - d_b)/dt where d_b is
/// the transported-rotated field; by construction N = lambda(Lap_h d^{n+1} - f)
/// with f the accumulated force, mirroring N = lambda(Lap d - f(d)).
VectorField advance_director(VectorField& d, const VectorField& u, const Params& p,
                             double dt, int substeps);

/// (I - coef * Lap_h)^{-1} rhs with the compact 5-point stencil; periodic via
/// FFT symbol, Dirichlet via interior DST-I with `boundary` folded into the
/// right side. Exposed for the solvers' implicit viscous stages.
void helmholtz_invert_stencil(const Grid& grid, double coef, const double* rhs,
                              const double* boundary, double* out);

/// Compact 5-point Laplacian with given boundary values (Dirichlet grids) or
/// wrap-around (periodic). Used where consistency with the implicit stencil
/// matters.
void laplacian_stencil(const Grid& grid, const double* in, double* out);

}  // namespace nemlab
