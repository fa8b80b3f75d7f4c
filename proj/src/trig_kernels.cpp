// trig_kernels.cpp -- vectorizable sin/cos over contiguous arrays.

#include "floquet/kernels.hpp"

#include <cmath>

namespace flq::kernels {

void sincos_array(const double* phase, double* c, double* s, std::ptrdiff_t n) {
#pragma omp simd
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        c[i] = std::cos(phase[i]);
        s[i] = std::sin(phase[i]);
    }
}

} // namespace flq::kernels
