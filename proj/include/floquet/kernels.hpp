// kernels.hpp -- small vectorized numeric kernels (compiled separately with
// relaxed floating-point flags so that the loops vectorize).

#pragma once

#include <cstddef>

namespace flq::kernels {

// c[i] = cos(phase[i]), s[i] = sin(phase[i]) for |phase| of moderate size.
void sincos_array(const double* phase, double* c, double* s, std::ptrdiff_t n);

} // namespace flq::kernels
