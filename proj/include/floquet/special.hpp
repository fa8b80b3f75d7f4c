// special.hpp -- spherical Bessel families for real arguments and the
// cylindrical Hankel function H0^(1) for complex arguments.

#pragma once

#include "floquet/common.hpp"

#include <vector>

namespace flq {

// j_0..j_lmax at x >= 0.
void sph_bessel_j(int lmax, double x, double* out);
// y_0..y_lmax at x > 0.
void sph_bessel_y(int lmax, double x, double* out);
// Exponentially scaled modified spherical Bessel functions, x >= 0:
//   out[l] = exp(-x) * i_l(x),   i_l(x) = i^{-l} j_l(i x)
void sph_bessel_i_scaled(int lmax, double x, double* out);
//   out[l] = exp(+x) * k_l(x),   k_l(x) = -i^{l} h_l^(1)(i x)   (k_0 = e^{-x}/x), x > 0
void sph_bessel_k_scaled(int lmax, double x, double* out);

// Hankel function of the first kind, order 0, complex argument w != 0, with
// the principal branch of log (so H0^(1)(-x + i0) continues from the upper
// half plane). Power series for |w| <= 6, asymptotic expansion beyond.
cplx hankel1_0(cplx w);

// Bessel J0 for complex argument (power series; intended for |w| <= ~20).
cplx bessel_j0(cplx w);

} // namespace flq

namespace flq {
// Spherical Bessel j_l and Hankel h_l^(1) for complex argument w != 0, l = 0..lmax.
void sph_bessel_jh(int lmax, cplx w, cplx* j, cplx* h);
} // namespace flq
