#pragma once

#include <array>
#include <complex>
#include <vector>

#include "nemlab/field.hpp"
#include "nemlab/params.hpp"

namespace nemlab {

/// One L2-normalized Neumann eigenfunction of -Lap on a rectangle or the
/// disk (radial family), with closed-form point evaluation. The expansion
/// apparatus below works in the unit-sound-speed normalization (B = 1).
struct NeumannMode {
    enum class Domain { Rectangle, Disk };
    Domain domain = Domain::Rectangle;
    int kx = 0, ky = 0;    // rectangle cosine indices
    int radial = 0;        // disk: 1-based radial index
    double lx = 0.0, ly = 0.0;
    double radius = 1.0;
    double lambda0 = 0.0;  // eigen-frequency, lambda0^2 the eigenvalue
    double norm = 1.0;     // normalization factor of phi

    double phi(double x, double y = 0.0) const;
    std::array<double, 2> grad_phi(double x, double y = 0.0) const;
    /// Analytic Laplacian (for residual checks): equals -lambda0^2 phi.
    double lap_phi(double x, double y = 0.0) const;
};

/// The `count` lowest rectangle modes on [0,lx] x [0,ly] sorted by lambda0.
/// Distinct cosine modes are automatically boundary-orthogonal, so degenerate
/// pairs need no extra rotation.
std::vector<NeumannMode> rectangle_modes(double lx, double ly, int count);

/// 1D interval modes cos(k pi x / L) on [0, L].
std::vector<NeumannMode> interval_modes(double L, int count);

/// Radial disk modes J0(lambda r) with lambda R at the zeros of J1.
std::vector<NeumannMode> disk_radial_modes(double radius, int count);

/// s-th positive zero of J1 (s >= 1), by bracketing + bisection on the
/// standard Bessel function.
double bessel_j1_zero(int s);

/// Two-term eigenvalue data of the damped operator: the first corrections
///   i lambda_1^{+-} = -((1 +- i)/2) sqrt(mu/(2 lambda0^3)) int_bdry |grad phi|^2
/// with the boundary integral in closed form (rectangle) or exactly zero
/// (disk radial family, which is how the ball evades the H-condition).
struct ModeExpansion {
    NeumannMode mode;
    std::complex<double> ilambda1_plus;
    std::complex<double> ilambda1_minus;
    double boundary_integral = 0.0;
    bool h_condition_active = false;
};

ModeExpansion mode_expansion(const NeumannMode& mode, const Params& p);

/// i lambda_{k,eps,2}^{+-} = +- i lambda0 + sqrt(eps) i lambda_1^{+-}; the
/// O(eps) coefficient is not specified by the expansion and is taken as zero.
std::complex<double> ilambda_eps2(const ModeExpansion& ex, int sign, double eps);

/// Viscous boundary-layer factor exp(-zeta (1 +- i) sqrt(lambda0/(2 mu)) / |grad L|)
/// in the stretched coordinate zeta = L(x)/sqrt(eps); |grad L| = 1 for the
/// exact rectangle distance.
std::complex<double> layer_factor(const NeumannMode& mode, const Params& p, double zeta,
                                  int sign);

/// The layer momentum profile m^{+-,b} at a domain point: minus the interior
/// mode momentum at the wall trace, damped by layer_factor at
/// zeta = dist(x, bdry)/sqrt(eps). Zero for disk radial modes (no layer).
std::array<std::complex<double>, 2> boundary_layer_profile(const NeumannMode& mode,
                                                           const Params& p, double eps,
                                                           double x, double y, int sign);

/// Interior mode momentum m^{+-} = -+ i grad phi / lambda0 at a point.
std::array<std::complex<double>, 2> mode_momentum(const NeumannMode& mode, double x, double y,
                                                  int sign);

/// b(t) = b0 exp(conj(i lambda) t/eps) + int_0^t c(s) exp(conj(i lambda)(t-s)/eps) ds
/// on uniform samples of c over [0, T]; returns b at the sample times.
/// Rejects Re(conj(i lambda)) > 0.
std::vector<std::complex<double>> mode_amplitude_solve(std::complex<double> b0,
                                                       std::complex<double> ilambda_eps2,
                                                       double eps,
                                                       const std::vector<std::complex<double>>& c,
                                                       double T);

/// (1/T) int_0^T cos(lk t/eps) cos(ll t/eps) dt in closed form (B = 1).
double resonant_average(double lk, double ll, double eps, double T);

/// Max-norm residual of
///   div(grad phi_k (x) grad phi_l + grad phi_l (x) grad phi_k)
///     + lambda_k^2 grad(phi_k phi_l) - grad(grad phi_k . grad phi_l)
/// sampled on a periodic grid of extent (2 lx, 2 ly) where the closed forms
/// are band-limited, so spectral derivatives are exact. Requires
/// lambda_k = lambda_l.
double gradient_structure_residual(const NeumannMode& mk, const NeumannMode& ml,
                                   const Grid& grid);

}  // namespace nemlab
