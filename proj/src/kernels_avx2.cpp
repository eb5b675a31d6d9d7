// AVX2 block kernel. Compiled with -mavx2 in its own translation unit; the
// dispatcher only hands out fill_block_avx2 after a cpuid check.
//
// Row-scan formulation: within a row, the recurrence unrolls to
//
//   c[i][j] = max( c[i-1][j], max_{j' <= j} match[j'], c[i][j0-1] )
//   match[j] = x_i == y_j ? c[i-1][j-1] + 1 : 0
//
// which is an inclusive prefix max over the match candidates, seeded with
// the block's west border. The identity holds because rows are monotone and
// neighbor cells differ by at most one; both are invariants of every
// reachable table state. Arrows are then re-derived from the original
// up/left comparison so the tie-break matches the scalar kernel bit for bit.

#include <immintrin.h>

#include <cstring>

#include "wavelcs/kernels.hpp"

namespace wavelcs {

namespace {

// Shift lanes toward higher indices, zero-filling lane 0 (byte count N < 16).
template <int N>
inline __m256i shift_lanes_up(__m256i v) {
    const __m256i low_half = _mm256_permute2x128_si256(v, v, 0x08);  // [v_lo, 0]
    return _mm256_alignr_epi8(v, low_half, 16 - N);
}

inline __m256i prefix_max(__m256i v) {
    v = _mm256_max_epi32(v, shift_lanes_up<4>(v));
    v = _mm256_max_epi32(v, shift_lanes_up<8>(v));
    v = _mm256_max_epi32(v, _mm256_permute2x128_si256(v, v, 0x08));
    return v;
}

}  // namespace

void fill_block_avx2(const BlockArgs& a) {
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i arrow_up = _mm256_set1_epi32(static_cast<int>(Arrow::Up));
    const __m256i arrow_left = _mm256_set1_epi32(static_cast<int>(Arrow::Left));
    const __m256i arrow_diag = _mm256_set1_epi32(static_cast<int>(Arrow::Diag));
    // Picks byte 0 of every int32 lane, per 128-bit half.
    const __m256i pack_low_bytes = _mm256_setr_epi8(
        0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
        0, 4, 8, 12, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1);

    for (std::size_t i = a.i_first; i <= a.i_last; ++i) {
        const char x_i = a.x[i - 1];
        const __m256i x_wide = _mm256_set1_epi32(static_cast<unsigned char>(x_i));
        Length* cur = a.c + i * a.c_stride;
        const Length* prev = cur - a.c_stride;
        Arrow* arrows = a.b + (i - 1) * a.b_stride;

        std::int32_t carry = static_cast<std::int32_t>(cur[a.j_first - 1]);
        std::size_t j = a.j_first;
        for (; j + 7 <= a.j_last; j += 8) {
            const __m256i y_wide =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.y_wide + (j - 1)));
            const __m256i eq = _mm256_cmpeq_epi32(x_wide, y_wide);
            const __m256i diag =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev + j - 1));
            const __m256i up = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(prev + j));

            __m256i cand = _mm256_and_si256(_mm256_add_epi32(diag, one), eq);
            cand = prefix_max(cand);
            cand = _mm256_max_epi32(cand, _mm256_set1_epi32(carry));
            const __m256i value = _mm256_max_epi32(up, cand);
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(cur + j), value);
            carry = _mm256_extract_epi32(value, 7);

            // left[j] = cur[j-1]: the west border or a lane stored just above.
            const __m256i left =
                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cur + j - 1));
            const __m256i up_wins = _mm256_cmpgt_epi32(up, left);
            __m256i arrow = _mm256_blendv_epi8(arrow_left, arrow_up, up_wins);
            arrow = _mm256_blendv_epi8(arrow, arrow_diag, eq);

            const __m256i packed = _mm256_shuffle_epi8(arrow, pack_low_bytes);
            const std::uint32_t lo = static_cast<std::uint32_t>(_mm256_extract_epi32(packed, 0));
            const std::uint32_t hi = static_cast<std::uint32_t>(_mm256_extract_epi32(packed, 4));
            std::memcpy(arrows + (j - 1), &lo, sizeof lo);
            std::memcpy(arrows + (j - 1) + 4, &hi, sizeof hi);
        }
        for (; j <= a.j_last; ++j) {
            const CellStep step = lcs_cell(x_i, a.y[j - 1], prev[j - 1], prev[j], cur[j - 1]);
            cur[j] = step.value;
            arrows[j - 1] = step.arrow;
        }
    }
}

}  // namespace wavelcs
