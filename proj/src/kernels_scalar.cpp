#include "wavelcs/kernels.hpp"

namespace wavelcs {

void fill_block_scalar(const BlockArgs& a) {
    for (std::size_t i = a.i_first; i <= a.i_last; ++i) {
        const char x_i = a.x[i - 1];
        Length* cur = a.c + i * a.c_stride;
        const Length* prev = cur - a.c_stride;
        Arrow* arrows = a.b + (i - 1) * a.b_stride;
        for (std::size_t j = a.j_first; j <= a.j_last; ++j) {
            const CellStep step = lcs_cell(x_i, a.y[j - 1], prev[j - 1], prev[j], cur[j - 1]);
            cur[j] = step.value;
            arrows[j - 1] = step.arrow;
        }
    }
}

}  // namespace wavelcs
