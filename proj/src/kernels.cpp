// Kernel selection. Compiled without SIMD flags; the cpuid probe must run on
// any host this binary reaches.

#include "wavelcs/kernels.hpp"

#include <string>

#include "wavelcs/errors.hpp"

namespace wavelcs {

namespace {

bool host_has_avx2() noexcept {
#if defined(WAVELCS_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

bool host_has_neon() noexcept {
#if defined(WAVELCS_HAVE_NEON_KERNEL)
    return true;  // baseline on every ARM target we build for
#else
    return false;
#endif
}

}  // namespace

bool kernel_available(KernelKind kind) noexcept {
    switch (kind) {
        case KernelKind::Auto:
        case KernelKind::Scalar:
            return true;
        case KernelKind::Avx2:
            return host_has_avx2();
        case KernelKind::Neon:
            return host_has_neon();
    }
    return false;
}

KernelKind detect_kernel() noexcept {
    if (host_has_avx2()) {
        return KernelKind::Avx2;
    }
    if (host_has_neon()) {
        return KernelKind::Neon;
    }
    return KernelKind::Scalar;
}

BlockKernelFn resolve_kernel(KernelKind kind) {
    if (kind == KernelKind::Auto) {
        kind = detect_kernel();
    }
    if (!kernel_available(kind)) {
        throw ConfigError(std::string("kernel '") + kernel_name(kind) +
                          "' is not available on this host");
    }
    switch (kind) {
        case KernelKind::Scalar:
            return &fill_block_scalar;
#if defined(WAVELCS_HAVE_AVX2_KERNEL)
        case KernelKind::Avx2:
            return &fill_block_avx2;
#endif
#if defined(WAVELCS_HAVE_NEON_KERNEL)
        case KernelKind::Neon:
            return &fill_block_neon;
#endif
        default:
            throw ConfigError("kernel not compiled into this build");
    }
}

const char* kernel_name(KernelKind kind) noexcept {
    switch (kind) {
        case KernelKind::Auto:
            return "auto";
        case KernelKind::Scalar:
            return "scalar";
        case KernelKind::Avx2:
            return "avx2";
        case KernelKind::Neon:
            return "neon";
    }
    return "unknown";
}

}  // namespace wavelcs
