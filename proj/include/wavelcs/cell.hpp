#pragma once

#include <cstddef>
#include <cstdint>

// Kept free of heavy includes: the vector kernel translation units compile
// against this header on bare toolchains.

namespace wavelcs {

/// Cell values of the DP table. 32 bits; an LCS length can never reach
/// 2^31 for any table that fits in memory, so signed SIMD compares are safe.
using Length = std::uint32_t;

/// Which recurrence case produced a cell. Drives traceback.
enum class Arrow : std::uint8_t {
    Diag = 0,  // symbols matched, step to (i-1, j-1)
    Up = 1,    // step to (i-1, j)
    Left = 2,  // step to (i, j-1)
};

struct CellStep {
    Length value;
    Arrow arrow;
};

/// One step of the recurrence. Ties between the up and left neighbors
/// resolve LEFT; the strict `up > left` test is the canonical tie-break and
/// every fill path must reproduce it exactly.
constexpr CellStep lcs_cell(char x_i, char y_j, Length diag, Length up, Length left) noexcept {
    if (x_i == y_j) {
        return {diag + 1, Arrow::Diag};
    }
    if (up > left) {
        return {up, Arrow::Up};
    }
    return {left, Arrow::Left};
}

}  // namespace wavelcs
