#include "floquet/special.hpp"

#include "floquet/quadrature.hpp"

#include <algorithm>

namespace flq {

namespace {

// Power series for j_l at small x: x^l/(2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
double sph_j_series(int l, double x, double sign_x2) {
    double pref = 1.0;
    for (int k = 1; k <= l; ++k) pref *= x / (2.0 * k + 1.0);
    double term = 1.0, sum = 1.0;
    const double y = sign_x2 * 0.5 * x * x;
    for (int k = 1; k < 200; ++k) {
        term *= y / (k * (2.0 * l + 2.0 * k + 1.0));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return pref * sum;
}

} // namespace

void sph_bessel_j(int lmax, double x, double* out) {
    if (x < 1e-8 || x < 1.0) {
        for (int l = 0; l <= lmax; ++l) out[l] = sph_j_series(l, x, -1.0);
        return;
    }
    if (x >= lmax) {
        out[0] = std::sin(x) / x;
        if (lmax >= 1) out[1] = std::sin(x) / (x * x) - std::cos(x) / x;
        for (int l = 1; l < lmax; ++l) out[l + 1] = (2.0 * l + 1.0) / x * out[l] - out[l - 1];
        return;
    }
    // Miller's downward recurrence
    const int start = lmax + 20 + static_cast<int>(x);
    std::vector<double> t(start + 2, 0.0);
    t[start + 1] = 0.0;
    t[start] = 1e-300;
    for (int l = start; l >= 1; --l) {
        t[l - 1] = (2.0 * l + 1.0) / x * t[l] - t[l + 1];
        if (std::abs(t[l - 1]) > 1e250) {
            for (int k = l - 1; k <= start + 1; ++k) t[k] *= 1e-250;
        }
    }
    const double j0 = std::sin(x) / x;
    const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
    const double scale = (std::abs(j0) > std::abs(j1)) ? j0 / t[0] : j1 / t[1];
    for (int l = 0; l <= lmax; ++l) out[l] = t[l] * scale;
}

void sph_bessel_y(int lmax, double x, double* out) {
    out[0] = -std::cos(x) / x;
    if (lmax >= 1) out[1] = -std::cos(x) / (x * x) - std::sin(x) / x;
    for (int l = 1; l < lmax; ++l) out[l + 1] = (2.0 * l + 1.0) / x * out[l] - out[l - 1];
}

void sph_bessel_i_scaled(int lmax, double x, double* out) {
    if (x < 1.0) {
        const double e = std::exp(-x);
        for (int l = 0; l <= lmax; ++l) out[l] = e * sph_j_series(l, x, +1.0);
        return;
    }
    // downward recurrence: i_{l-1} = i_{l+1} + (2l+1)/x i_l, normalized by e^{-x} i_0
    const int start = lmax + 20 + static_cast<int>(x);
    std::vector<double> t(start + 2, 0.0);
    t[start] = 1e-300;
    for (int l = start; l >= 1; --l) {
        t[l - 1] = (2.0 * l + 1.0) / x * t[l] + t[l + 1];
        if (std::abs(t[l - 1]) > 1e250) {
            for (int k = l - 1; k <= start + 1; ++k) t[k] *= 1e-250;
        }
    }
    const double i0s = -std::expm1(-2.0 * x) / (2.0 * x);
    const double scale = i0s / t[0];
    for (int l = 0; l <= lmax; ++l) out[l] = t[l] * scale;
}

void sph_bessel_k_scaled(int lmax, double x, double* out) {
    out[0] = 1.0 / x;
    if (lmax >= 1) out[1] = (1.0 / x) * (1.0 + 1.0 / x);
    for (int l = 1; l < lmax; ++l) out[l + 1] = out[l - 1] + (2.0 * l + 1.0) / x * out[l];
}

cplx bessel_j0(cplx w) {
    const cplx y = -0.25 * w * w;
    cplx term = 1.0, sum = 1.0;
    for (int k = 1; k < 300; ++k) {
        term *= y / (double(k) * double(k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

cplx hankel1_0(cplx w) {
    constexpr double euler_gamma = 0.57721566490153286061;
    if (std::abs(w) <= 6.0 && w.imag() <= 2.0) {
        // Y0 = (2/pi)[(log(w/2) + gamma) J0 + sum_k (-1)^{k+1} H_k (w^2/4)^k / (k!)^2]
        const cplx y = 0.25 * w * w;
        cplx term = 1.0, j0 = 1.0, s = 0.0;
        double hk = 0.0;
        for (int k = 1; k < 300; ++k) {
            term *= -y / (double(k) * double(k));
            hk += 1.0 / k;
            j0 += term;
            s -= hk * term;
            if (std::abs(term) * (1.0 + hk) < 1e-18 * (std::abs(j0) + std::abs(s))) break;
        }
        const cplx y0 = (2.0 / kPi) * ((std::log(0.5 * w) + euler_gamma) * j0 + s);
        return j0 + kI * y0;
    }
    // Integral form of the Hankel expansion (valid for -pi/2 < arg w < 3pi/2):
    //   H0(w) = sqrt(2/(pi w)) e^{i(w - pi/4)} (2/sqrt(pi)) int_0^inf e^{-s^2} (1 + i s^2/(2w))^{-1/2} ds
    // The integrand's branch point sits at s^2 = 2 i w, well away from the real
    // axis in the region where this branch is used.
    static const Rule1D rule = gauss_legendre(56, 0.0, 7.0);
    cplx acc = 0.0;
    const cplx inv2w = 1.0 / (2.0 * w);
    for (std::size_t q = 0; q < rule.x.size(); ++q) {
        const double s2 = rule.x[q] * rule.x[q];
        acc += rule.w[q] * std::exp(-s2) / std::sqrt(1.0 + kI * s2 * inv2w);
    }
    acc *= 2.0 / std::sqrt(kPi);
    return std::sqrt(2.0 / (kPi * w)) * std::exp(kI * (w - 0.25 * kPi)) * acc;
}

} // namespace flq

namespace flq {

void sph_bessel_jh(int lmax, cplx w, cplx* j, cplx* h) {
    const double aw = std::abs(w);
    // j_l
    if (aw < 1.0) {
        for (int l = 0; l <= lmax; ++l) {
            cplx pref = 1.0;
            for (int k = 1; k <= l; ++k) pref *= w / (2.0 * k + 1.0);
            cplx term = 1.0, sum = 1.0;
            const cplx y = -0.5 * w * w;
            for (int k = 1; k < 200; ++k) {
                term *= y / (k * (2.0 * l + 2.0 * k + 1.0));
                sum += term;
                if (std::abs(term) < 1e-17 * std::abs(sum)) break;
            }
            j[l] = pref * sum;
        }
    } else {
        const cplx j0 = std::sin(w) / w;
        const cplx j1 = std::sin(w) / (w * w) - std::cos(w) / w;
        if (aw >= lmax + 1.0) {
            j[0] = j0;
            if (lmax >= 1) j[1] = j1;
            for (int l = 1; l < lmax; ++l) j[l + 1] = (2.0 * l + 1.0) / w * j[l] - j[l - 1];
        } else {
            const int start = lmax + 25 + static_cast<int>(aw);
            std::vector<cplx> t(start + 2, 0.0);
            t[start] = 1e-300;
            for (int l = start; l >= 1; --l) {
                t[l - 1] = (2.0 * l + 1.0) / w * t[l] - t[l + 1];
                if (std::abs(t[l - 1]) > 1e250)
                    for (int k = l - 1; k <= start + 1; ++k) t[k] *= 1e-250;
            }
            const cplx scale = (std::abs(j0) > std::abs(j1)) ? j0 / t[0] : j1 / t[1];
            for (int l = 0; l <= lmax; ++l) j[l] = t[l] * scale;
        }
    }
    // h_l^(1): upward recurrence (dominant solution)
    const cplx e = std::exp(kI * w);
    h[0] = -kI * e / w;
    if (lmax >= 1) h[1] = -e / w * (1.0 + kI / w);
    for (int l = 1; l < lmax; ++l) h[l + 1] = (2.0 * l + 1.0) / w * h[l] - h[l - 1];
}

} // namespace flq
