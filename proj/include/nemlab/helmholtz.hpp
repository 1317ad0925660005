#pragma once

#include <stdexcept>

#include "nemlab/field.hpp"

namespace nemlab {

/// Thrown when a Neumann solve receives data violating the zero-mean
/// compatibility condition.
struct CompatibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inverse Laplacians and the Helmholtz projectors Q = grad lap^-1 div,
/// P = I - Q on one grid.
///
/// Periodic grids work in the Fourier basis. Bounded rectangles work in the
/// Neumann cosine basis: scalars are cos (x) cos series, gradient fields are
/// the sampled gradients of those series (sin (x) cos and cos (x) sin). The
/// projection Q is orthogonal in the trapezoidal inner product, so the
/// algebra P^2 = P, Q^2 = Q, P + Q = I and div(Pv) = 0 (in the compatible
/// divergence below) hold to rounding on arbitrary fields. The constant mode
/// is divergence-free and is assigned to P on both grid kinds.
class PoissonContext {
  public:
    explicit PoissonContext(const Grid& grid);

    const Grid& grid() const { return *grid_; }

    /// Solve lap f = g with zero-mean f. Periodic: the mean of g is
    /// subtracted first. Bounded: homogeneous Neumann data; throws
    /// CompatibilityError when |int g| > 1e-8 * ||g|| * sqrt(|D|).
    ScalarField inv_laplacian(const ScalarField& g) const;

    VectorField project_Q(const VectorField& v) const;
    VectorField project_P(const VectorField& v) const;

    /// Divergence in the same discrete sense the projector inverts;
    /// div(project_P(v)) vanishes to rounding in this operator. Coincides
    /// with the spectral divergence on periodic grids.
    ScalarField compatible_divergence(const VectorField& v) const;

  private:
    const Grid* grid_;
};

}  // namespace nemlab
