#include "variants.hpp"

namespace fsir::kernels::scalar {

namespace {
inline double clamp(double x, double r) { return x < -r ? -r : (x > r ? r : x); }
}  // namespace

void clamp_accumulate(const double* src, std::size_t n, double r, double* acc) {
    for (std::size_t j = 0; j < n; ++j) acc[j] += clamp(src[j], r);
}

double clamp_copy_sqnorm(const double* src, std::size_t n, double r, double* dst) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        dst[j] = clamp(src[j], r);
        s += dst[j] * dst[j];
    }
    return s;
}

double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += a[j] * b[j];
    return s;
}

void axpy(double alpha, const double* x, std::size_t n, double* y) {
    for (std::size_t j = 0; j < n; ++j) y[j] += alpha * x[j];
}

}  // namespace fsir::kernels::scalar
