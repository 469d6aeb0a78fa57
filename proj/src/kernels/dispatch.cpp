#include <cstdlib>
#include <string>

#include "fsir/error.hpp"
#include "fsir/kernels.hpp"
#include "variants.hpp"

namespace fsir::kernels {
namespace {

constexpr KernelTable kScalar{Isa::scalar, &scalar::clamp_accumulate, &scalar::clamp_copy_sqnorm,
                              &scalar::dot, &scalar::axpy};

#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{Isa::avx2, &avx2::clamp_accumulate, &avx2::clamp_copy_sqnorm,
                            &avx2::dot, &avx2::axpy};
#endif

#if defined(__aarch64__) && defined(__ARM_NEON)
constexpr KernelTable kNeon{Isa::neon, &neon::clamp_accumulate, &neon::clamp_copy_sqnorm,
                            &neon::dot, &neon::axpy};
#endif

const KernelTable& select() {
    if (const char* env = std::getenv("FSIR_SIMD"); env != nullptr) {
        const std::string want(env);
        if (want == "scalar") return kScalar;
        if (want == "avx2" && supported(Isa::avx2)) return table(Isa::avx2);
        if (want == "neon" && supported(Isa::neon)) return table(Isa::neon);
    }
    if (supported(Isa::avx2)) return table(Isa::avx2);
    if (supported(Isa::neon)) return table(Isa::neon);
    return kScalar;
}

}  // namespace

bool supported(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::neon:
#if defined(__aarch64__) && defined(__ARM_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table(Isa isa) {
    if (!supported(isa))
        throw InvalidInput("kernels: ISA " + std::string(name(isa)) + " not supported here");
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2:
            return kAvx2;
#endif
#if defined(__aarch64__) && defined(__ARM_NEON)
        case Isa::neon:
            return kNeon;
#endif
        default:
            return kScalar;
    }
}

const KernelTable& active() {
    static const KernelTable& chosen = select();
    return chosen;
}

std::string_view name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
        case Isa::neon:
            return "neon";
    }
    return "unknown";
}

}  // namespace fsir::kernels
