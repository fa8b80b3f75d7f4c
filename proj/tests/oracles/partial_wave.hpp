// partial_wave.hpp -- independent reference for time-independent spherical
// potentials: phase shifts from the radial Schroedinger equation
//   u'' = (V(r) + l(l+1)/r^2 - k^2) u,   u ~ r^{l+1} at the origin,
// integrated with classical RK4 and matched to Riccati-Bessel functions.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline void riccati(int l, double x, double& jh, double& djh, double& nh, double& dnh) {
    // x j_l(x), x y_l(x) and derivatives by upward recurrence (x not small).
    double j0 = std::sin(x) / x, y0 = -std::cos(x) / x;
    double j1 = std::sin(x) / (x * x) - std::cos(x) / x, y1 = -std::cos(x) / (x * x) - std::sin(x) / x;
    std::vector<double> j{j0, j1}, y{y0, y1};
    for (int n = 1; n <= l; ++n) {
        j.push_back((2 * n + 1) / x * j[n] - j[n - 1]);
        y.push_back((2 * n + 1) / x * y[n] - y[n - 1]);
    }
    // (x f_l)' = x f_{l-1} - l f_l  (f_{-1}: j_{-1} = cos x / x, y_{-1} = sin x / x)
    const double jm = l == 0 ? std::cos(x) / x : j[l - 1];
    const double ym = l == 0 ? std::sin(x) / x : y[l - 1];
    jh = x * j[l];
    nh = x * y[l];
    djh = x * jm - l * j[l];
    dnh = x * ym - l * y[l];
}

// Phase shift delta_l for wave number k, potential V(r) set to zero beyond R.
inline double phase_shift(const std::function<double(double)>& V, double k, int l, double R, int steps = 40000) {
    // integrate in s with r = s^2 to resolve the origin
    const double s_end = std::sqrt(R);
    const double h = s_end / steps;
    auto rhs = [&](double s, double u, double du, double& fu, double& fdu) {
        const double r = s * s;
        // du/ds = 2 s u_r ; d(u_r)/ds = 2 s (V + l(l+1)/r^2 - k^2) u
        fu = 2.0 * s * du;
        fdu = 2.0 * s * (V(r) + l * (l + 1) / (r * r) - k * k) * u;
    };
    double s = h;
    double r0 = s * s;
    double u = std::pow(r0, l + 1), du = (l + 1) * std::pow(r0, l);
    for (int i = 1; i < steps; ++i) {
        double a1, b1, a2, b2, a3, b3, a4, b4;
        rhs(s, u, du, a1, b1);
        rhs(s + h / 2, u + h / 2 * a1, du + h / 2 * b1, a2, b2);
        rhs(s + h / 2, u + h / 2 * a2, du + h / 2 * b2, a3, b3);
        rhs(s + h, u + h * a3, du + h * b3, a4, b4);
        u += h / 6 * (a1 + 2 * a2 + 2 * a3 + a4);
        du += h / 6 * (b1 + 2 * b2 + 2 * b3 + b4);
        s += h;
        const double sc = std::abs(u) + std::abs(du);
        if (sc > 1e100) { u /= sc; du /= sc; }
    }
    const double beta = du / u;
    double jh, djh, nh, dnh;
    riccati(l, k * R, jh, djh, nh, dnh);
    // u ~ jh - nh tan(delta)
    const double t = (beta * jh - k * djh) / (beta * nh - k * dnh);
    return std::atan(t);
}

// Amplitude T(nu, nu') = (i / 8 pi^2) sum_l (2l+1)(e^{2 i delta_l} - 1) P_l(cos theta)
// of the operator S = I - 2 pi i T on L^2(S^2).
inline cplx amplitude(const std::vector<double>& delta, double cos_theta) {
    cplx acc = 0.0;
    double p0 = 1.0, p1 = cos_theta;
    for (size_t l = 0; l < delta.size(); ++l) {
        const double pl = l == 0 ? 1.0 : (l == 1 ? cos_theta : 0.0);
        double p = pl;
        if (l >= 2) {
            p = ((2.0 * l - 1) * cos_theta * p1 - (l - 1.0) * p0) / l;
            p0 = p1;
            p1 = p;
        }
        acc += (2.0 * l + 1) * (std::exp(cplx(0, 2 * delta[l])) - 1.0) * p;
    }
    const double pi = 3.14159265358979323846;
    return cplx(0, 1) / (8 * pi * pi) * acc;
}

} // namespace oracle
