#pragma once

#include <cstddef>
#include <string_view>

namespace mwi::simd {

enum class Backend { Scalar, Avx2 };

// Active backend is process-global; the best supported one is picked at load
// time and can be overridden (e.g. to force the scalar reference).
Backend active_backend();
void set_backend(Backend b);
bool backend_available(Backend b);
std::string_view to_string(Backend b);

// Batched sin/cos through the active backend. Arguments must satisfy
// |x| <= 1e8 (single-stage Cody-Waite reduction); out-of-range inputs fall
// back to the scalar path elementwise.
void sincos(const double* x, double* s, double* c, std::size_t n);

// Reference implementations, directly callable for equivalence testing.
void sincos_scalar(const double* x, double* s, double* c, std::size_t n);
#if defined(MWI_BUILD_AVX2)
void sincos_avx2(const double* x, double* s, double* c, std::size_t n);
#endif

}  // namespace mwi::simd
