#include "nemlab/modes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nemlab/calculus.hpp"
#include "nemlab/detail/expint.hpp"

namespace nemlab {
namespace {

double j0(double x) { return std::cyl_bessel_j(0.0, x); }
double j1(double x) { return std::cyl_bessel_j(1.0, x); }

}  // namespace

double NeumannMode::phi(double x, double y) const {
    if (domain == Domain::Rectangle) {
        double v = norm * std::cos(kx * M_PI * x / lx);
        if (ly > 0.0) v *= std::cos(ky * M_PI * y / ly);
        return v;
    }
    double r = std::hypot(x, y);
    return norm * j0(lambda0 * r);
}

std::array<double, 2> NeumannMode::grad_phi(double x, double y) const {
    if (domain == Domain::Rectangle) {
        double ax = kx * M_PI / lx;
        double cosx = std::cos(ax * x), sinx = std::sin(ax * x);
        double cosy = ly > 0.0 ? std::cos(ky * M_PI * y / ly) : 1.0;
        double siny = ly > 0.0 ? std::sin(ky * M_PI * y / ly) : 0.0;
        return {-norm * ax * sinx * cosy, ly > 0.0 ? -norm * (ky * M_PI / ly) * cosx * siny : 0.0};
    }
    double r = std::hypot(x, y);
    if (r < 1e-300) return {0.0, 0.0};
    double dr = -norm * lambda0 * j1(lambda0 * r);  // d/dr J0(z) = -J1(z)
    return {dr * x / r, dr * y / r};
}

double NeumannMode::lap_phi(double x, double y) const {
    if (domain == Domain::Rectangle) {
        return -lambda0 * lambda0 * phi(x, y);
    }
    // J0'' + J0'/r with J0' = -J1, J1' = J0 - J1/z gives -lambda^2 J0
    double r = std::hypot(x, y);
    double z = lambda0 * r;
    if (z < 1e-8) {
        // series: lap J0(lambda r) = -lambda^2 (1 - z^2/2 ...) approx -lambda^2 J0
        return -lambda0 * lambda0 * norm * (1.0 - 0.5 * z * z / 2.0);
    }
    double d2 = -(j0(z) - j1(z) / z);          // J0''(z)
    double d1 = -j1(z);                        // J0'(z)
    return norm * lambda0 * lambda0 * (d2 + d1 / z);
}

std::vector<NeumannMode> rectangle_modes(double lx, double ly, int count) {
    if (count < 1 || lx <= 0.0 || ly <= 0.0)
        throw std::invalid_argument("rectangle_modes: bad arguments");
    std::vector<NeumannMode> out;
    const int kmax = 48;
    for (int kx = 0; kx <= kmax; ++kx) {
        for (int ky = 0; ky <= kmax; ++ky) {
            if (kx == 0 && ky == 0) continue;
            NeumannMode m;
            m.domain = NeumannMode::Domain::Rectangle;
            m.kx = kx;
            m.ky = ky;
            m.lx = lx;
            m.ly = ly;
            double ax = kx * M_PI / lx, ay = ky * M_PI / ly;
            m.lambda0 = std::sqrt(ax * ax + ay * ay);
            double nk = std::sqrt((kx > 0 ? 2.0 : 1.0) / lx);
            double nl = std::sqrt((ky > 0 ? 2.0 : 1.0) / ly);
            m.norm = nk * nl;
            out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end(), [](const NeumannMode& a, const NeumannMode& b) {
        if (a.lambda0 != b.lambda0) return a.lambda0 < b.lambda0;
        if (a.kx != b.kx) return a.kx < b.kx;
        return a.ky < b.ky;
    });
    out.resize(count);
    return out;
}

std::vector<NeumannMode> interval_modes(double L, int count) {
    if (count < 1 || L <= 0.0) throw std::invalid_argument("interval_modes: bad arguments");
    std::vector<NeumannMode> out;
    for (int k = 1; k <= count; ++k) {
        NeumannMode m;
        m.domain = NeumannMode::Domain::Rectangle;
        m.kx = k;
        m.ky = 0;
        m.lx = L;
        m.ly = 0.0;
        m.lambda0 = k * M_PI / L;
        m.norm = std::sqrt(2.0 / L);
        out.push_back(m);
    }
    return out;
}

double bessel_j1_zero(int s) {
    if (s < 1) throw std::invalid_argument("bessel_j1_zero: s >= 1");
    // scan for the s-th sign change of J1 on (0.5, inf), then bisect
    double x0 = 0.5, x1 = 0.5;
    int found = 0;
    double prev = j1(x0);
    for (double x = 1.0; x < 40.0 + 4.0 * s; x += 0.25) {
        double cur = j1(x);
        if (prev * cur < 0.0) {
            ++found;
            if (found == s) {
                x0 = x - 0.25;
                x1 = x;
                break;
            }
        }
        prev = cur;
    }
    if (found < s) throw std::runtime_error("bessel_j1_zero: scan failed");
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (x0 + x1);
        if (j1(x0) * j1(mid) <= 0.0)
            x1 = mid;
        else
            x0 = mid;
    }
    return 0.5 * (x0 + x1);
}

std::vector<NeumannMode> disk_radial_modes(double radius, int count) {
    if (count < 1 || radius <= 0.0)
        throw std::invalid_argument("disk_radial_modes: bad arguments");
    std::vector<NeumannMode> out;
    for (int s = 1; s <= count; ++s) {
        NeumannMode m;
        m.domain = NeumannMode::Domain::Disk;
        m.radial = s;
        m.radius = radius;
        double z = bessel_j1_zero(s);
        m.lambda0 = z / radius;
        // int_D J0(lambda r)^2 = pi R^2 J0(z)^2 when J1(z) = 0
        m.norm = 1.0 / (std::sqrt(M_PI) * radius * std::abs(j0(z)));
        out.push_back(m);
    }
    return out;
}

ModeExpansion mode_expansion(const NeumannMode& mode, const Params& p) {
    ModeExpansion ex;
    ex.mode = mode;
    if (mode.domain == NeumannMode::Domain::Rectangle) {
        // sum over the four edges of the squared tangential gradient; the
        // normal derivative vanishes by the Neumann condition. Closed form:
        // each pair of edges contributes n^2 (k_t pi / L_t)^2 * (L_t / 2).
        double n2 = mode.norm * mode.norm;
        double contrib = 0.0;
        if (mode.ly > 0.0) {
            double ay = mode.ky * M_PI / mode.ly;
            if (mode.ky > 0) contrib += 2.0 * n2 * ay * ay * (mode.ly / 2.0);
            double ax = mode.kx * M_PI / mode.lx;
            if (mode.kx > 0) contrib += 2.0 * n2 * ax * ax * (mode.lx / 2.0);
        }
        // 1D interval: the boundary gradient vanishes entirely
        ex.boundary_integral = contrib;
    } else {
        ex.boundary_integral = 0.0;  // radial symmetry: both derivatives vanish on the rim
    }
    double S = 0.5 * std::sqrt(p.mu / (2.0 * std::pow(mode.lambda0, 3))) * ex.boundary_integral;
    ex.ilambda1_plus = std::complex<double>(-S, -S);   // -((1+i)/2) * sqrt(..) * integral
    ex.ilambda1_minus = std::complex<double>(-S, +S);  // -((1-i)/2) * ...
    ex.h_condition_active = ex.boundary_integral > 0.0;
    return ex;
}

std::complex<double> ilambda_eps2(const ModeExpansion& ex, int sign, double eps) {
    std::complex<double> base(0.0, sign >= 0 ? ex.mode.lambda0 : -ex.mode.lambda0);
    return base + std::sqrt(eps) * (sign >= 0 ? ex.ilambda1_plus : ex.ilambda1_minus);
}

std::complex<double> layer_factor(const NeumannMode& mode, const Params& p, double zeta,
                                  int sign) {
    double rate = std::sqrt(mode.lambda0 / (2.0 * p.mu));
    std::complex<double> one_pm_i(1.0, sign >= 0 ? 1.0 : -1.0);
    return std::exp(-zeta * one_pm_i * rate);
}

std::array<std::complex<double>, 2> mode_momentum(const NeumannMode& mode, double x, double y,
                                                  int sign) {
    auto gp = mode.grad_phi(x, y);
    // m^{+-} = +- grad phi / (i lambda0) = -+ i grad phi / lambda0
    std::complex<double> factor(0.0, sign >= 0 ? -1.0 / mode.lambda0 : 1.0 / mode.lambda0);
    return {factor * gp[0], factor * gp[1]};
}

std::array<std::complex<double>, 2> boundary_layer_profile(const NeumannMode& mode,
                                                           const Params& p, double eps,
                                                           double x, double y, int sign) {
    if (mode.domain == NeumannMode::Domain::Disk) return {0.0, 0.0};  // no layer
    double dx = std::min(x, mode.lx - x);
    double dy = mode.ly > 0.0 ? std::min(y, mode.ly - y) : dx;
    double L = std::min(dx, dy);
    if (L < 0.0) throw std::invalid_argument("boundary_layer_profile: point outside domain");
    // wall trace: clamp the coordinate realizing the distance
    double tx = x, ty = y;
    if (dx <= dy) tx = (x <= mode.lx - x) ? 0.0 : mode.lx;
    else ty = (y <= mode.ly - y) ? 0.0 : mode.ly;
    auto mint = mode_momentum(mode, tx, ty, sign);
    std::complex<double> damp = layer_factor(mode, p, L / std::sqrt(eps), sign);
    return {-mint[0] * damp, -mint[1] * damp};
}

std::vector<std::complex<double>> mode_amplitude_solve(std::complex<double> b0,
                                                       std::complex<double> ilam,
                                                       double eps,
                                                       const std::vector<std::complex<double>>& c,
                                                       double T) {
    std::complex<double> z = std::conj(ilam) / eps;
    if (z.real() > 1e-14)
        throw std::invalid_argument("mode_amplitude_solve: growing exponent rejected");
    if (c.size() < 2 || T <= 0.0)
        throw std::invalid_argument("mode_amplitude_solve: need >= 2 samples of c");
    const double h = T / double(c.size() - 1);
    std::vector<std::complex<double>> b(c.size());
    b[0] = b0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        b[k + 1] = detail::exp_step(b[k], z, h, c[k], c[k + 1]);
    return b;
}

double resonant_average(double lk, double ll, double eps, double T) {
    if (T <= 0.0 || eps <= 0.0) throw std::invalid_argument("resonant_average: T, eps > 0");
    double a = lk / eps, b = ll / eps;
    double diff = a - b, sum = a + b;
    auto term = [T](double w) { return w == 0.0 ? T : std::sin(w * T) / w; };
    return 0.5 * (term(diff) + term(sum)) / T;
}

double gradient_structure_residual(const NeumannMode& mk, const NeumannMode& ml,
                                   const Grid& grid) {
    if (mk.domain != NeumannMode::Domain::Rectangle || ml.domain != NeumannMode::Domain::Rectangle)
        throw std::invalid_argument("gradient_structure_residual: rectangle modes only");
    if (std::abs(mk.lambda0 - ml.lambda0) > 1e-12 * std::max(mk.lambda0, ml.lambda0))
        throw std::invalid_argument("gradient_structure_residual: modes must share lambda0");
    if (!grid.periodic() || std::abs(grid.lx() - 2.0 * mk.lx) > 1e-12 ||
        (grid.dim() == 2 && std::abs(grid.ly() - 2.0 * mk.ly) > 1e-12))
        throw std::invalid_argument(
            "gradient_structure_residual: need a periodic grid of extent (2lx, 2ly)");

    const int dim = grid.dim();
    TensorField sym(grid);
    ScalarField prod(grid);
    ScalarField gdot(grid);
    for (int j = 0; j < grid.ny(); ++j) {
        for (int i = 0; i < grid.nx(); ++i) {
            double x = grid.x(i), y = grid.y(j);
            auto gk = mk.grad_phi(x, y);
            auto gl = ml.grad_phi(x, y);
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    sym(r, c, i, j) = gk[r] * gl[c] + gl[r] * gk[c];
            prod(i, j) = mk.phi(x, y) * ml.phi(x, y);
            gdot(i, j) = gk[0] * gl[0] + gk[1] * gl[1];
        }
    }
    VectorField lhs = tensor_divergence(sym);
    VectorField gp = grad(prod);
    VectorField gg = grad(gdot);
    double lam2 = mk.lambda0 * mk.lambda0;
    double res = 0.0;
    for (int c = 0; c < dim; ++c)
        for (std::size_t k = 0; k < grid.size(); ++k)
            res = std::max(std::abs(lhs.data(c)[k] + lam2 * gp.data(c)[k] - gg.data(c)[k]), res);
    return res;
}

}  // namespace nemlab
