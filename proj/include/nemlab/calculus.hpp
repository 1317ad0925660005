#pragma once

#include "nemlab/field.hpp"
#include "nemlab/params.hpp"

namespace nemlab {

// Discrete differential operators. Periodic grids differentiate spectrally
// (machine precision for resolved modes, Nyquist zeroed in odd derivatives);
// bounded grids use 2nd-order centered stencils with one-sided closures at
// the boundary.

VectorField grad(const ScalarField& f);
ScalarField div(const VectorField& v);
ScalarField laplacian(const ScalarField& f);
VectorField vector_laplacian(const VectorField& v);

/// Gradient of one vector component along one axis (same schemes as grad).
void derivative(const ScalarField& f, int axis, ScalarField& out);

/// Skew part of the velocity gradient: Omega_ij = (d_j u_i - d_i u_j)/2 ...
/// with the Jacobian convention (grad u)_ij = d u_i / d x_j, so
/// Omega = (grad u - grad u^T)/2. Exactly skew-symmetric by construction.
TensorField vorticity_tensor(const VectorField& u);

/// Ginzburg-Landau potential F(d) = (1/(2 zeta^2)) (|d|^2 - 1)^2.
ScalarField director_potential(const VectorField& d, const Params& p);

/// Pointwise gradient of F in d: f(d) = (2/zeta^2)(|d|^2 - 1) d.
VectorField director_force(const VectorField& d, const Params& p);

/// The bracketed momentum-forcing tensor
///   (F(d) + |grad d|^2/2) I - grad d (.) grad d + (d (x) N - N (x) d)/(2 lambda)
/// where (grad d (.) grad d)_ij = sum_m d_i(d_m) d_j(d_m) and
/// (a (x) b)_ij = a_i b_j. The last summand is exactly skew-symmetric.
TensorField ericksen_stress(const VectorField& d, const VectorField& N, const Params& p);

/// Row-wise divergence: out_i = sum_j d_j T_ij.
VectorField tensor_divergence(const TensorField& T);

/// Convective derivative (u . grad) f, componentwise for vectors.
ScalarField advective_derivative(const VectorField& u, const ScalarField& f);
VectorField advective_derivative(const VectorField& u, const VectorField& w);

/// div(m (x) u), row-wise divergence of the momentum flux tensor m_i u_j.
VectorField momentum_flux_divergence(const VectorField& m, const VectorField& u);

}  // namespace nemlab
