#pragma once

#include <cmath>
#include <complex>

namespace nemlab::detail {

/// int_0^h exp(z (h - tau)) dtau, stable for small |z h|.
inline std::complex<double> expint0(std::complex<double> z, double h) {
    std::complex<double> zh = z * h;
    if (std::abs(zh) < 1e-6)
        return h * (1.0 + zh / 2.0 + zh * zh / 6.0);
    return (std::exp(zh) - 1.0) / z;
}

/// int_0^h tau exp(z (h - tau)) dtau = h I0 - (h e^{zh} - I0)/z.
inline std::complex<double> expint1(std::complex<double> z, double h) {
    std::complex<double> zh = z * h;
    if (std::abs(zh) < 1e-6)
        return h * h * (0.5 + zh / 6.0 + zh * zh / 24.0);
    std::complex<double> i0 = expint0(z, h);
    return h * i0 - (h * std::exp(zh) - i0) / z;
}

/// Advance a(t+h) = a(t) e^{zh} + int_0^h (c0 + (c1-c0) tau/h) e^{z(h-tau)} dtau.
inline std::complex<double> exp_step(std::complex<double> a, std::complex<double> z, double h,
                                     std::complex<double> c0, std::complex<double> c1) {
    std::complex<double> i0 = expint0(z, h);
    std::complex<double> i1 = expint1(z, h);
    return a * std::exp(z * h) + c0 * i0 + (c1 - c0) * i1 / h;
}

}  // namespace nemlab::detail
