#include "mwi/simd/sincos.hpp"

#include <cmath>
#include <stdexcept>

namespace mwi::simd {

namespace {

Backend detect_best() {
#if defined(MWI_BUILD_AVX2)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Backend::Avx2;
#endif
    return Backend::Scalar;
}

Backend g_backend = detect_best();

}  // namespace

Backend active_backend() { return g_backend; }

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(MWI_BUILD_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

void set_backend(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument("simd: requested backend is not available on this host");
    g_backend = b;
}

std::string_view to_string(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "?";
}

void sincos(const double* x, double* s, double* c, std::size_t n) {
#if defined(MWI_BUILD_AVX2)
    if (g_backend == Backend::Avx2) {
        sincos_avx2(x, s, c, n);
        return;
    }
#endif
    sincos_scalar(x, s, c, n);
}

}  // namespace mwi::simd
