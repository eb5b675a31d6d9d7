// NEON block kernel, 4 lanes of int32. Same row-scan formulation as the
// AVX2 kernel; see kernels_avx2.cpp for the derivation. Compiled on ARM
// targets only, where NEON is baseline.

#include <arm_neon.h>

#include "wavelcs/kernels.hpp"

namespace wavelcs {

namespace {

inline int32x4_t prefix_max(int32x4_t v) {
    const int32x4_t zero = vdupq_n_s32(0);
    v = vmaxq_s32(v, vextq_s32(zero, v, 3));  // lane k vs lane k-1
    v = vmaxq_s32(v, vextq_s32(zero, v, 2));  // lane k vs lane k-2
    return v;
}

}  // namespace

void fill_block_neon(const BlockArgs& a) {
    const int32x4_t one = vdupq_n_s32(1);
    const int32x4_t arrow_up = vdupq_n_s32(static_cast<int>(Arrow::Up));
    const int32x4_t arrow_left = vdupq_n_s32(static_cast<int>(Arrow::Left));
    const int32x4_t arrow_diag = vdupq_n_s32(static_cast<int>(Arrow::Diag));

    for (std::size_t i = a.i_first; i <= a.i_last; ++i) {
        const char x_i = a.x[i - 1];
        const int32x4_t x_wide = vdupq_n_s32(static_cast<unsigned char>(x_i));
        Length* cur = a.c + i * a.c_stride;
        const Length* prev = cur - a.c_stride;
        Arrow* arrows = a.b + (i - 1) * a.b_stride;

        std::int32_t carry = static_cast<std::int32_t>(cur[a.j_first - 1]);
        std::size_t j = a.j_first;
        for (; j + 3 <= a.j_last; j += 4) {
            const int32x4_t y_wide = vld1q_s32(a.y_wide + (j - 1));
            const uint32x4_t eq = vceqq_s32(x_wide, y_wide);
            const int32x4_t diag = vld1q_s32(reinterpret_cast<const std::int32_t*>(prev + j - 1));
            const int32x4_t up = vld1q_s32(reinterpret_cast<const std::int32_t*>(prev + j));

            int32x4_t cand =
                vreinterpretq_s32_u32(vandq_u32(vreinterpretq_u32_s32(vaddq_s32(diag, one)), eq));
            cand = prefix_max(cand);
            cand = vmaxq_s32(cand, vdupq_n_s32(carry));
            const int32x4_t value = vmaxq_s32(up, cand);
            vst1q_s32(reinterpret_cast<std::int32_t*>(cur + j), value);
            carry = vgetq_lane_s32(value, 3);

            const int32x4_t left = vld1q_s32(reinterpret_cast<const std::int32_t*>(cur + j - 1));
            const uint32x4_t up_wins = vcgtq_s32(up, left);
            int32x4_t arrow = vbslq_s32(up_wins, arrow_up, arrow_left);
            arrow = vbslq_s32(eq, arrow_diag, arrow);

            const uint16x4_t arrow16 = vmovn_u32(vreinterpretq_u32_s32(arrow));
            const uint8x8_t arrow8 = vmovn_u16(vcombine_u16(arrow16, arrow16));
            std::uint8_t* out = reinterpret_cast<std::uint8_t*>(arrows + (j - 1));
            vst1_lane_u8(out + 0, arrow8, 0);
            vst1_lane_u8(out + 1, arrow8, 1);
            vst1_lane_u8(out + 2, arrow8, 2);
            vst1_lane_u8(out + 3, arrow8, 3);
        }
        for (; j <= a.j_last; ++j) {
            const CellStep step = lcs_cell(x_i, a.y[j - 1], prev[j - 1], prev[j], cur[j - 1]);
            cur[j] = step.value;
            arrows[j - 1] = step.arrow;
        }
    }
}

}  // namespace wavelcs
