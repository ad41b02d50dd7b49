#include "mwi/simd/sincos.hpp"

#include <cmath>

namespace mwi::simd {

void sincos_scalar(const double* x, double* s, double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = std::sin(x[i]);
        c[i] = std::cos(x[i]);
    }
}

}  // namespace mwi::simd
