#include "variants.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace fsir::kernels::avx2 {

void clamp_accumulate(const double* src, std::size_t n, double r, double* acc) {
    const __m256d hi = _mm256_set1_pd(r);
    const __m256d lo = _mm256_set1_pd(-r);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d x = _mm256_loadu_pd(src + j);
        x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);
        _mm256_storeu_pd(acc + j, _mm256_add_pd(_mm256_loadu_pd(acc + j), x));
    }
    for (; j < n; ++j) {
        const double x = src[j] < -r ? -r : (src[j] > r ? r : src[j]);
        acc[j] += x;
    }
}

double clamp_copy_sqnorm(const double* src, std::size_t n, double r, double* dst) {
    const __m256d hi = _mm256_set1_pd(r);
    const __m256d lo = _mm256_set1_pd(-r);
    __m256d s0 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d x = _mm256_min_pd(_mm256_max_pd(_mm256_loadu_pd(src + j), lo), hi);
        _mm256_storeu_pd(dst + j, x);
        s0 = _mm256_fmadd_pd(x, x, s0);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, s0);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; j < n; ++j) {
        dst[j] = src[j] < -r ? -r : (src[j] > r ? r : src[j]);
        s += dst[j] * dst[j];
    }
    return s;
}

double dot(const double* a, const double* b, std::size_t n) {
    __m256d s0 = _mm256_setzero_pd();
    __m256d s1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j), s0);
        s1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + j + 4), _mm256_loadu_pd(b + j + 4), s1);
    }
    if (j + 4 <= n) {
        s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j), s0);
        j += 4;
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(s0, s1));
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; j < n; ++j) s += a[j] * b[j];
    return s;
}

void axpy(double alpha, const double* x, std::size_t n, double* y) {
    // mul then add, not fma: keeps results identical to the scalar loop.
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d prod = _mm256_mul_pd(va, _mm256_loadu_pd(x + j));
        _mm256_storeu_pd(y + j, _mm256_add_pd(_mm256_loadu_pd(y + j), prod));
    }
    for (; j < n; ++j) y[j] += alpha * x[j];
}

}  // namespace fsir::kernels::avx2

#endif
