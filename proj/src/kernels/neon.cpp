#include "variants.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>

namespace fsir::kernels::neon {

void clamp_accumulate(const double* src, std::size_t n, double r, double* acc) {
    const float64x2_t hi = vdupq_n_f64(r);
    const float64x2_t lo = vdupq_n_f64(-r);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const float64x2_t x = vminq_f64(vmaxq_f64(vld1q_f64(src + j), lo), hi);
        vst1q_f64(acc + j, vaddq_f64(vld1q_f64(acc + j), x));
    }
    for (; j < n; ++j) acc[j] += src[j] < -r ? -r : (src[j] > r ? r : src[j]);
}

double clamp_copy_sqnorm(const double* src, std::size_t n, double r, double* dst) {
    const float64x2_t hi = vdupq_n_f64(r);
    const float64x2_t lo = vdupq_n_f64(-r);
    float64x2_t s0 = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        const float64x2_t x = vminq_f64(vmaxq_f64(vld1q_f64(src + j), lo), hi);
        vst1q_f64(dst + j, x);
        s0 = vfmaq_f64(s0, x, x);
    }
    double s = vaddvq_f64(s0);
    for (; j < n; ++j) {
        dst[j] = src[j] < -r ? -r : (src[j] > r ? r : src[j]);
        s += dst[j] * dst[j];
    }
    return s;
}

double dot(const double* a, const double* b, std::size_t n) {
    float64x2_t s0 = vdupq_n_f64(0.0);
    float64x2_t s1 = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        s0 = vfmaq_f64(s0, vld1q_f64(a + j), vld1q_f64(b + j));
        s1 = vfmaq_f64(s1, vld1q_f64(a + j + 2), vld1q_f64(b + j + 2));
    }
    double s = vaddvq_f64(vaddq_f64(s0, s1));
    for (; j < n; ++j) s += a[j] * b[j];
    return s;
}

void axpy(double alpha, const double* x, std::size_t n, double* y) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2)
        vst1q_f64(y + j, vaddq_f64(vld1q_f64(y + j), vmulq_f64(va, vld1q_f64(x + j))));
    for (; j < n; ++j) y[j] += alpha * x[j];
}

}  // namespace fsir::kernels::neon

#endif
