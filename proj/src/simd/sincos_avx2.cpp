#include "mwi/simd/sincos.hpp"

#include <immintrin.h>

#include <cmath>

namespace mwi::simd {

namespace {

// 2/pi and pi/2 split into 33-bit chunks; the three-stage Cody-Waite
// subtraction keeps the reduced argument accurate for |x| up to ~1e8.
constexpr double INV_PIO2 = 6.36619772367581382433e-01;
constexpr double PIO2_1 = 1.57079632673412561417e+00;
constexpr double PIO2_2 = 6.07710050630396597660e-11;
constexpr double PIO2_2t = 2.02226624879595063154e-21;

// Taylor coefficients on |r| <= pi/4; truncation error below 1e-16.
constexpr double S3 = -1.0 / 6.0;
constexpr double S5 = 1.0 / 120.0;
constexpr double S7 = -1.0 / 5040.0;
constexpr double S9 = 1.0 / 362880.0;
constexpr double S11 = -1.0 / 39916800.0;
constexpr double S13 = 1.0 / 6227020800.0;
constexpr double S15 = -1.0 / 1307674368000.0;

constexpr double C2 = -0.5;
constexpr double C4 = 1.0 / 24.0;
constexpr double C6 = -1.0 / 720.0;
constexpr double C8 = 1.0 / 40320.0;
constexpr double C10 = -1.0 / 3628800.0;
constexpr double C12 = 1.0 / 479001600.0;
constexpr double C14 = -1.0 / 87178291200.0;
constexpr double C16 = 1.0 / 20922789888000.0;

inline __m256d poly_sin(__m256d r, __m256d r2) {
    __m256d p = _mm256_set1_pd(S15);
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S13));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S11));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S9));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S7));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S5));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(S3));
    return _mm256_fmadd_pd(_mm256_mul_pd(p, r2), r, r);
}

inline __m256d poly_cos(__m256d r2) {
    __m256d p = _mm256_set1_pd(C16);
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C14));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C12));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C10));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C8));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C6));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C4));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(C2));
    return _mm256_fmadd_pd(p, r2, _mm256_set1_pd(1.0));
}

inline void block4(const double* x, double* s, double* c) {
    const __m256d vx = _mm256_loadu_pd(x);

    const __m256d dn =
        _mm256_round_pd(_mm256_mul_pd(vx, _mm256_set1_pd(INV_PIO2)),
                        _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(dn, _mm256_set1_pd(PIO2_1), vx);
    r = _mm256_fnmadd_pd(dn, _mm256_set1_pd(PIO2_2), r);
    r = _mm256_fnmadd_pd(dn, _mm256_set1_pd(PIO2_2t), r);
    const __m256d r2 = _mm256_mul_pd(r, r);

    const __m256d ps = poly_sin(r, r2);
    const __m256d pc = poly_cos(r2);

    // Quadrant q = n mod 4: odd q swaps sin/cos; q in {2,3} negates sin,
    // q in {1,2} negates cos.
    const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(dn));
    const __m256i one = _mm256_set1_epi64x(1);
    const __m256i two = _mm256_set1_epi64x(2);
    const __m256d swap = _mm256_castsi256_pd(
        _mm256_cmpeq_epi64(_mm256_and_si256(q, one), one));
    const __m256d sin_sign =
        _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(q, two), 62));
    const __m256d cos_sign = _mm256_castsi256_pd(
        _mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(q, one), two), 62));

    const __m256d vs = _mm256_xor_pd(_mm256_blendv_pd(ps, pc, swap), sin_sign);
    const __m256d vc = _mm256_xor_pd(_mm256_blendv_pd(pc, ps, swap), cos_sign);
    _mm256_storeu_pd(s, vs);
    _mm256_storeu_pd(c, vc);
}

}  // namespace

void sincos_avx2(const double* x, double* s, double* c, std::size_t n) {
    const __m256d limit = _mm256_set1_pd(1e8);
    const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d bad =
            _mm256_cmp_pd(_mm256_and_pd(vx, absmask), limit, _CMP_GT_OQ);
        if (_mm256_movemask_pd(bad) != 0) {
            sincos_scalar(x + i, s + i, c + i, 4);
        } else {
            block4(x + i, s + i, c + i);
        }
    }
    if (i < n) sincos_scalar(x + i, s + i, c + i, n - i);
}

}  // namespace mwi::simd
