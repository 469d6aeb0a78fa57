#pragma once

#include <cstddef>
#include <string_view>

// Inner loops shared by the slicing, screening, and attack code. Each has a
// scalar reference implementation plus SIMD variants (AVX2+FMA on x86-64,
// NEON on AArch64); the widest one the running CPU supports is picked once
// at first use. Set FSIR_SIMD=scalar in the environment to force the
// reference path.
//
// clamp_accumulate and axpy are elementwise, so every variant is
// bit-identical to the reference. The reductions (dot, clamp_copy_sqnorm)
// reassociate sums and agree with the reference to rounding only.

namespace fsir::kernels {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
    Isa isa;
    /// acc[j] += clamp(src[j], -r, r)
    void (*clamp_accumulate)(const double* src, std::size_t n, double r, double* acc);
    /// dst[j] = clamp(src[j], -r, r); returns sum of dst[j]^2
    double (*clamp_copy_sqnorm)(const double* src, std::size_t n, double r, double* dst);
    double (*dot)(const double* a, const double* b, std::size_t n);
    /// y[j] += alpha * x[j]
    void (*axpy)(double alpha, const double* x, std::size_t n, double* y);
};

bool supported(Isa isa);
/// Table for a specific ISA; throws InvalidInput if the CPU lacks it.
const KernelTable& table(Isa isa);
/// Table chosen for this process.
const KernelTable& active();
std::string_view name(Isa isa);

}  // namespace fsir::kernels
