#pragma once

#include <cstddef>
#include <cstdint>

#include "wavelcs/cell.hpp"

// Block-fill kernels. A kernel fills one rectangular tile of the DP grid
// given final north and west borders. The scalar kernel is the reference;
// the vector kernels must produce bit-identical tables and are selected at
// runtime from the host CPU.
//
// This header stays light (no standard library beyond <cstdint>) so the
// per-ISA translation units can be checked on bare cross toolchains.

namespace wavelcs {

/// One tile of the DP grid, cell ranges 1-based inclusive. The caller
/// guarantees that row i_first-1 and column j_first-1 of `c` hold final
/// values and that the surrounding table state satisfies the LCS invariants
/// (monotone rows/columns, steps of at most one); the vector kernels rely on
/// those invariants, which hold for every reachable fill state.
struct BlockArgs {
    const char* x = nullptr;             // x[i-1] is the i-th parent symbol
    const char* y = nullptr;             // y[j-1] is the j-th child symbol
    const std::int32_t* y_wide = nullptr;  // y zero-extended to int32; vector kernels only
    Length* c = nullptr;                 // DP cells, c[i * c_stride + j]
    std::size_t c_stride = 0;
    Arrow* b = nullptr;                  // arrows, b[(i-1) * b_stride + (j-1)]
    std::size_t b_stride = 0;
    std::size_t i_first = 0, i_last = 0;
    std::size_t j_first = 0, j_last = 0;
};

using BlockKernelFn = void (*)(const BlockArgs&);

/// Reference kernel: plain recurrence, row-major over the tile.
void fill_block_scalar(const BlockArgs& args);

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__) || defined(_M_IX86)
#define WAVELCS_HAVE_AVX2_KERNEL 1
/// AVX2 kernel: row-scan formulation, 8 cells per step.
void fill_block_avx2(const BlockArgs& args);
#endif

#if defined(__ARM_NEON) || defined(__aarch64__) || defined(_M_ARM64)
#define WAVELCS_HAVE_NEON_KERNEL 1
/// NEON kernel: row-scan formulation, 4 cells per step.
void fill_block_neon(const BlockArgs& args);
#endif

enum class KernelKind : std::uint8_t { Auto = 0, Scalar, Avx2, Neon };

/// Whether `kind` can run on this build and host. Auto and Scalar always can.
bool kernel_available(KernelKind kind) noexcept;

/// Best kernel available on this host (never Auto).
KernelKind detect_kernel() noexcept;

/// Maps a kind to its function, resolving Auto via detect_kernel().
/// Throws ConfigError when the kind is not available.
BlockKernelFn resolve_kernel(KernelKind kind);

const char* kernel_name(KernelKind kind) noexcept;

}  // namespace wavelcs
