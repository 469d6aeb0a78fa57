#pragma once

#include <cstddef>

// Per-ISA entry points. The SIMD translation units are compiled with their
// own target flags and must not include Eigen or other inline-heavy headers.

namespace fsir::kernels::scalar {
void clamp_accumulate(const double* src, std::size_t n, double r, double* acc);
double clamp_copy_sqnorm(const double* src, std::size_t n, double r, double* dst);
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, std::size_t n, double* y);
}  // namespace fsir::kernels::scalar

namespace fsir::kernels::avx2 {
void clamp_accumulate(const double* src, std::size_t n, double r, double* acc);
double clamp_copy_sqnorm(const double* src, std::size_t n, double r, double* dst);
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, std::size_t n, double* y);
}  // namespace fsir::kernels::avx2

namespace fsir::kernels::neon {
void clamp_accumulate(const double* src, std::size_t n, double r, double* acc);
double clamp_copy_sqnorm(const double* src, std::size_t n, double r, double* dst);
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, std::size_t n, double* y);
}  // namespace fsir::kernels::neon
